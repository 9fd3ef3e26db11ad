#pragma once

#include <functional>
#include <ostream>
#include <vector>

#include "gridmono/grid.hpp"
#include "gridmono/kasteleyn.hpp"
#include "gridmono/partition_value.hpp"
#include "gridmono/rational.hpp"

namespace gridmono {

// Hard cap for loop-vertex configuration enumeration; the configuration
// count grows super-exponentially with the vertex count.
inline constexpr int kLoopVertexCap = 14;

// Undirected simple graph with signed edge weights, obtained by summing
// parallel edges of the oriented grid (the off-diagonal of K). The sign
// of signed_weight(u, v) says whether the merged edge runs u -> v.
struct MergedGraph {
    int n = 0;
    std::vector<std::vector<int>> nbr;            // ascending neighbour lists, 1-based
    std::vector<std::vector<Rational>> weight;    // parallel to nbr: signed w for (u -> nbr)
    Rational signed_weight(int u, int v) const;   // 0 when not adjacent
};

MergedGraph merge_parallel_edges(const OrientedGrid& grid, const WeightSpec& w);

// Weighted count of perfect matchings (each edge weight taken positive).
// Odd vertex count gives 0.
PartitionValue enumerate_perfect_matchings(const OrientedGrid& grid, const WeightSpec& w);

// Weighted count of all matchings, monomer weight x per unmatched vertex.
PartitionValue enumerate_matchings(const OrientedGrid& grid, const WeightSpec& w);

// One loop-vertex configuration: isolated vertices, doubled edges, and
// directed simple loops of even length >= 4 partitioning the vertex set.
struct LoopVertexConfig {
    std::vector<int> isolated;
    std::vector<std::pair<int, int>> doubled;
    std::vector<std::vector<int>> loops;  // directed vertex sequences
    Rational weight;
};

// Signed sum over all loop-vertex configurations: each directed loop
// contributes -prod sgn(v_i, v_{i+1}) a_{v_i,v_{i+1}}, doubled edges +a^2,
// isolated vertices x; both directions of every undirected loop are
// enumerated. Throws CapExceededError above kLoopVertexCap vertices.
PartitionValue enumerate_loop_vertex(const OrientedGrid& grid, const WeightSpec& w);

// Same enumeration, invoking the callback per configuration (debug stream).
void for_each_loop_vertex_config(const OrientedGrid& grid, const WeightSpec& w,
                                 const std::function<void(const LoopVertexConfig&)>& fn);

// Writes configurations one per line: "isolated: ...; doubled: ...; loops: ...".
void dump_loop_vertex_configs(const OrientedGrid& grid, const WeightSpec& w, std::ostream& os);

// Weight of a directed simple loop in a 2D free grid, computed without
// the orientation: (-1)^(vertices strictly inside the loop polygon) times
// the product of edge weights. Point-in-polygon uses exact integer ray
// crossing on the lattice embedding.
Rational plane_loop_weight(const OrientedGrid& grid, const std::vector<int>& loop_labels,
                           const WeightSpec& w);

// Orientation-based weight of the same loop, for cross-checking.
Rational oriented_loop_weight(const OrientedGrid& grid, const std::vector<int>& loop_labels,
                              const WeightSpec& w);

}  // namespace gridmono
