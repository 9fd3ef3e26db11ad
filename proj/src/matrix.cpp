#include "gridmono/matrix.hpp"

#include <sstream>

#include "gridmono/det.hpp"
#include "gridmono/errors.hpp"

namespace gridmono {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (n_ != o.n_) throw InternalError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    const int n = a.order(), p = b.order();
    RatMatrix c(n * p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (int r = 0; r < p; ++r)
                for (int s = 0; s < p; ++s) {
                    const Rational& brs = b.at(r, s);
                    if (brs != 0) c.at(i * p + r, j * p + s) = aij * brs;
                }
        }
    return c;
}

RatMatrix kron_chain(const std::vector<RatMatrix>& factors) {
    if (factors.empty()) throw InternalError("kron_chain needs at least one factor");
    RatMatrix acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
    return acc;
}

bool det_kron_identity_check(const RatMatrix& a, const RatMatrix& b) {
    if (a.order() <= 0 || b.order() <= 0)
        throw InternalError("det_kron_identity_check needs square nonempty matrices");
    Rational da = det_exact(a);
    Rational db = det_exact(b);
    Rational lhs = det_exact(kron(a, b));
    Rational rhs = 1;
    for (int i = 0; i < b.order(); ++i) rhs *= da;
    for (int i = 0; i < a.order(); ++i) rhs *= db;
    return lhs == rhs;
}

RatMatrix tridiag_toeplitz(int n, const Rational& sub, const Rational& diag, const Rational& super) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = diag;
        if (i + 1 < n) {
            m.at(i, i + 1) = super;
            m.at(i + 1, i) = sub;
        }
    }
    return m;
}

RatMatrix reversal(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
    return m;
}

RatMatrix wrap_block_cyclic(int n) {
    RatMatrix m(n);
    m.at(0, n - 1) = 1;
    m.at(n - 1, 0) = -1;
    return m;
}

RatMatrix wrap_block_twisted(int n) {
    RatMatrix m(n);
    m.at(0, n - 1) = 1;
    m.at(n - 1, 0) = 1;
    return m;
}

RatMatrix alternating_diag(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = (i % 2 == 0) ? 1 : -1;
    return m;
}

RatMatrix alternating_adiag(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = (i % 2 == 0) ? 1 : -1;
    return m;
}

std::string dump_rows(const RatMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) os << ' ';
            os << rational_to_string(m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace gridmono
