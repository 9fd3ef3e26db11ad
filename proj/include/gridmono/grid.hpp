#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridmono/errors.hpp"

namespace gridmono {

enum class Mode { Free, Cylindrical, Toroidal, Moebius, Klein };

// Axis lengths plus boundary-condition mode. Coordinates are 1-based
// d-tuples (k_1..k_d); axis 1 is the twist axis for Moebius/Klein.
struct GridSpec {
    std::vector<int> dims;
    Mode mode = Mode::Free;
    int ell = 0;  // number of leading cyclic axes; only used by Cylindrical

    int dimension() const { return static_cast<int>(dims.size()); }
    std::int64_t vertex_count() const;
    bool is_cyclic_axis(int axis) const;  // 1-based axis index
    bool has_dashed_edges() const { return mode == Mode::Moebius || mode == Mode::Klein; }
    bool all_dims_even() const;

    // Throws SpecError when the combination is invalid (see docs in grid.cpp).
    void validate() const;

    // CLI grammar: free | cylindrical:<l> | toroidal | moebius | klein
    std::string mode_string() const;
    static GridSpec parse(const std::string& dims_csv, const std::string& mode_text);

    bool operator==(const GridSpec& o) const = default;
};

std::string to_string(Mode m);

struct Vertex {
    std::vector<int> coords;
    int label = 0;  // boustrophedon label in 1..N
};

enum class EdgeKind { Solid, Dashed };

struct Edge {
    int tail = 0;   // labels; orientation is tail -> head
    int head = 0;
    int axis = 0;   // 1..d (dashed edges use axis 1)
    EdgeKind kind = EdgeKind::Solid;
};

// A 4-cycle recorded for parity checking: vertex labels in cyclic order
// and the edge indices realising each hop path[i] -> path[i+1].
struct Square {
    std::array<int, 4> path{};
    std::array<int, 4> edge_ids{};
    bool has_dashed = false;
};

struct OrientedGrid {
    GridSpec spec;
    std::vector<Vertex> vertices;  // index i holds label i+1
    std::vector<Edge> edges;
    std::vector<Square> squares;

    int label_of(const std::vector<int>& coords) const;
    const std::vector<int>& coords_of(int label) const { return vertices.at(label - 1).coords; }
    std::int64_t vertex_count() const { return static_cast<std::int64_t>(vertices.size()); }
    std::size_t solid_edge_count() const;
    std::size_t dashed_edge_count() const;
};

// Boustrophedon label of one coordinate tuple: the d-dimensional grid is
// n_d consecutive copies of the (d-1)-dimensional grid, labelled
// alternately forward and reversed.
int boustrophedon_label(const std::vector<int>& dims, const std::vector<int>& coords);

// The full bijection coords -> label, as a row-major table: entry at
// row-major index of (k_1..k_d) (axis 1 fastest) is the label.
std::vector<int> boustrophedon_labels(const std::vector<int>& dims);

// Builds the labelled, oriented grid: solid edges lower -> higher label,
// dashed edges oriented by constraint propagation, squares populated.
OrientedGrid build_grid(const GridSpec& spec);

// Re-derives every dashed-edge direction from the seed (the dashed edge at
// vertex 1, oriented outward unless seed_outward is false) by BFS over the
// (k_2..k_d) index lattice, forcing odd orientation on each dashed square.
// Throws InternalError on contradictory constraints.
void orient_dashed_edges(OrientedGrid& grid, bool seed_outward = true);

// True iff every recorded square, traversed in its stored cyclic order,
// has an odd number of co-oriented edges. For even cycles the parity does
// not depend on the traversal direction.
bool verify_odd_orientation(const OrientedGrid& grid);

// One factor of an oriented Cartesian product: a path 1->2->...->n oriented
// leaf to leaf, or a cycle with the canonical label orientation.
struct OrientedFactor {
    int length = 0;
    bool cyclic = false;
};

// Edge directions of the oriented Cartesian product: the axis-i edge at u
// keeps the factor direction iff u_{i+1}+...+u_d+(d-i) is even, else flips.
// Returned as (tail coords, head coords) pairs covering every product edge.
std::vector<std::pair<std::vector<int>, std::vector<int>>>
oriented_cartesian_orientation(const std::vector<OrientedFactor>& factors);

}  // namespace gridmono
