#pragma once

#include <vector>

#include "gridmono/grid.hpp"
#include "gridmono/matrix.hpp"
#include "gridmono/rational.hpp"

namespace gridmono {

enum class Arithmetic { Exact, Real };

// Vertex weight x plus one edge weight per axis.
struct WeightSpec {
    Rational x = 1;
    std::vector<Rational> a;
    Arithmetic arithmetic = Arithmetic::Exact;

    static WeightSpec unit(int d) {
        WeightSpec w;
        w.a.assign(d, Rational(1));
        return w;
    }
    void validate(const GridSpec& spec) const;
};

enum class Provenance { FromGraph, FromKronecker };

// Generalised adjacency matrix: diagonal x; entry (u,v) is +a_axis when
// u -> v, -a_axis when v -> u; parallel edges contribute additively.
struct SignedMatrix {
    RatMatrix m;
    Provenance provenance = Provenance::FromGraph;

    int order() const { return m.order(); }
};

SignedMatrix build_K_from_graph(const OrientedGrid& grid, const WeightSpec& w);

// Assembles K directly as a Kronecker sum of tridiagonal Toeplitz blocks,
// reversal blocks and boundary blocks. Supported: Free, Cylindrical(l),
// Toroidal (any dimension, even sides), Moebius and Klein with d = 3.
// Anything else throws UnsupportedError.
SignedMatrix build_K_kronecker(const GridSpec& spec, const WeightSpec& w);

// The dashed-edge contribution of a Moebius/Klein grid alone (entries
// +-a_1 at dashed positions); used to compare sign patterns.
RatMatrix dashed_contribution(const OrientedGrid& grid, const Rational& a1);

// Kronecker form of the d = 3 twisted-boundary term:
// a1 * adiag(1,-1,...) (x) diag(1,-1,...) (x) wrap_block_twisted(n1).
RatMatrix twisted_term_kronecker(const GridSpec& spec, const Rational& a1);

}  // namespace gridmono
