#include "gridmono/kasteleyn.hpp"

#include <string>

#include "gridmono/errors.hpp"

namespace gridmono {

void WeightSpec::validate(const GridSpec& spec) const {
    if (static_cast<int>(a.size()) != spec.dimension())
        throw WeightError("expected " + std::to_string(spec.dimension()) +
                          " axis weights, got " + std::to_string(a.size()));
}

SignedMatrix build_K_from_graph(const OrientedGrid& grid, const WeightSpec& w) {
    w.validate(grid.spec);
    const int n = static_cast<int>(grid.vertex_count());
    SignedMatrix K;
    K.m = RatMatrix(n);
    K.provenance = Provenance::FromGraph;
    for (int i = 0; i < n; ++i) K.m.at(i, i) = w.x;
    for (const Edge& e : grid.edges) {
        const Rational& weight = w.a[e.axis - 1];
        K.m.at(e.tail - 1, e.head - 1) += weight;
        K.m.at(e.head - 1, e.tail - 1) -= weight;
    }
    return K;
}

RatMatrix dashed_contribution(const OrientedGrid& grid, const Rational& a1) {
    const int n = static_cast<int>(grid.vertex_count());
    RatMatrix m(n);
    for (const Edge& e : grid.edges) {
        if (e.kind != EdgeKind::Dashed) continue;
        m.at(e.tail - 1, e.head - 1) += a1;
        m.at(e.head - 1, e.tail - 1) -= a1;
    }
    return m;
}

RatMatrix twisted_term_kronecker(const GridSpec& spec, const Rational& a1) {
    if (spec.dimension() != 3)
        throw UnsupportedError("twisted Kronecker term is only written for d = 3");
    RatMatrix term = kron_chain({alternating_adiag(spec.dims[2]),
                                 alternating_diag(spec.dims[1]),
                                 wrap_block_twisted(spec.dims[0])});
    for (int i = 0; i < term.order(); ++i)
        for (int j = 0; j < term.order(); ++j)
            if (term.at(i, j) != 0) term.at(i, j) *= a1;
    return term;
}

namespace {

// I_{n_d} (x) ... (x) I_{n_{j+1}} (x) core (x) J_{n_{j-1}} (x) ... (x) J_{n_1}
RatMatrix axis_term(const std::vector<int>& dims, int axis, const RatMatrix& core) {
    const int d = static_cast<int>(dims.size());
    std::vector<RatMatrix> chain;
    chain.reserve(d);
    for (int i = d; i > axis; --i) chain.push_back(RatMatrix::identity(dims[i - 1]));
    chain.push_back(core);
    for (int i = axis - 1; i >= 1; --i) chain.push_back(reversal(dims[i - 1]));
    return kron_chain(chain);
}

}  // namespace

SignedMatrix build_K_kronecker(const GridSpec& spec, const WeightSpec& w) {
    spec.validate();
    w.validate(spec);
    if (!spec.all_dims_even())
        throw UnsupportedError("the Kronecker construction needs even side lengths");
    const int d = spec.dimension();
    const bool twisted = spec.has_dashed_edges();
    if (twisted && d != 3)
        throw UnsupportedError("no Kronecker construction for " + to_string(spec.mode) +
                               " mode with d = " + std::to_string(d) +
                               "; use the graph builder");

    SignedMatrix K;
    K.provenance = Provenance::FromKronecker;
    K.m = axis_term(spec.dims, 1, tridiag_toeplitz(spec.dims[0], -w.a[0], w.x, w.a[0]));
    for (int axis = 2; axis <= d; ++axis)
        K.m += axis_term(spec.dims, axis,
                         tridiag_toeplitz(spec.dims[axis - 1], -w.a[axis - 1], 0, w.a[axis - 1]));
    for (int axis = 1; axis <= d; ++axis) {
        if (!spec.is_cyclic_axis(axis)) continue;
        RatMatrix wrap = wrap_block_cyclic(spec.dims[axis - 1]);
        for (int i = 0; i < wrap.order(); ++i)
            for (int j = 0; j < wrap.order(); ++j)
                if (wrap.at(i, j) != 0) wrap.at(i, j) *= w.a[axis - 1];
        K.m += axis_term(spec.dims, axis, wrap);
    }
    if (twisted) K.m += twisted_term_kronecker(spec, w.a[0]);
    return K;
}

}  // namespace gridmono
