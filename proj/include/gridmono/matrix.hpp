#pragma once

#include <string>
#include <vector>

#include "gridmono/rational.hpp"

namespace gridmono {

// Dense square matrix over exact rationals, row-major.
class RatMatrix {
  public:
    RatMatrix() = default;
    explicit RatMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    int order() const { return n_; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    static RatMatrix identity(int n);
    RatMatrix& operator+=(const RatMatrix& o);
    bool operator==(const RatMatrix& o) const = default;

  private:
    int n_ = 0;
    std::vector<Rational> e_;
};

// Kronecker (tensor) product: block matrix a_{ij} * B.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron_chain(const std::vector<RatMatrix>& factors);

// Self-test of det(A (x) B) = det(A)^p * det(B)^n for square A (n x n),
// B (p x p), evaluated with exact determinants.
bool det_kron_identity_check(const RatMatrix& a, const RatMatrix& b);

// Small building blocks used by the Kronecker-sum constructions.
RatMatrix tridiag_toeplitz(int n, const Rational& sub, const Rational& diag, const Rational& super);
RatMatrix reversal(int n);                    // antidiagonal of ones
RatMatrix wrap_block_cyclic(int n);           // adiag(1,0,...,0,-1)
RatMatrix wrap_block_twisted(int n);          // adiag(1,0,...,0,1)
RatMatrix alternating_diag(int n);            // diag(1,-1,1,-1,...)
RatMatrix alternating_adiag(int n);           // adiag(1,-1,1,-1,...)

// One matrix row per line, entries as decimal "p/q" strings separated by
// single spaces; stable across runs for cross-tool diffing.
std::string dump_rows(const RatMatrix& m);

}  // namespace gridmono
