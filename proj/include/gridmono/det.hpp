#pragma once

#include "gridmono/kasteleyn.hpp"
#include "gridmono/matrix.hpp"
#include "gridmono/rational.hpp"
#include "gridmono/real.hpp"

namespace gridmono {

// Exact determinant via fraction-free (Bareiss) elimination. Rows are
// scaled to integers first, so integer inputs take the pure-mpz path.
// The OpenMP variant parallelises the row updates; results are identical
// to the serial reference bit for bit.
Rational det_exact(const RatMatrix& m);
Rational det_exact_serial(const RatMatrix& m);
Rational det_exact_parallel(const RatMatrix& m);
inline Rational det_exact(const SignedMatrix& k) { return det_exact(k.m); }

struct RealDet {
    Real value;
    double rel_error_bound = 0.0;
    unsigned precision_bits = 0;
};

// LU with partial pivoting over high-precision reals, plus a coarse
// forward-error estimate. bits = 0 resolves to GRIDMONO_PRECISION_BITS if
// set, else 64 bits (hardware long double) for order <= 256 and 128 bits
// (MPFR) above.
RealDet det_real(const RatMatrix& m, unsigned bits = 0);
inline RealDet det_real(const SignedMatrix& k, unsigned bits = 0) { return det_real(k.m, bits); }

// Pfaffian of an antisymmetric matrix with zero diagonal, exact. Uses the
// first-row subset expansion up to order 16 and fraction-free-style skew
// elimination beyond; Pf(A)^2 = det(A).
Rational pfaffian_exact(const RatMatrix& a);
inline Rational pfaffian_exact(const SignedMatrix& k) { return pfaffian_exact(k.m); }

}  // namespace gridmono
