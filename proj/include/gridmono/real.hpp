#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "gridmono/rational.hpp"

namespace gridmono {

// Working precision for Real values, in significand bits. The default is
// 192 and can be overridden with the GRIDMONO_PRECISION_BITS environment
// variable (read once, at first use).
unsigned default_precision_bits();
void set_default_precision_bits(unsigned bits);
// True iff GRIDMONO_PRECISION_BITS was set in the environment.
bool precision_overridden_by_env();

// Arbitrary-precision real number (MPFR-backed, round-to-nearest).
class Real {
  public:
    Real() : Real(default_precision_bits()) {}
    explicit Real(unsigned bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Real(long x, unsigned bits = 0) : Real(bits ? bits : default_precision_bits()) {
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(double x, unsigned bits = 0) : Real(bits ? bits : default_precision_bits()) {
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(const Rational& q, unsigned bits = 0) : Real(bits ? bits : default_precision_bits()) {
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

    static Real pi(unsigned bits = 0);

    Real operator+(const Real& o) const { Real r(prec2(o)); mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-(const Real& o) const { Real r(prec2(o)); mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator*(const Real& o) const { Real r(prec2(o)); mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator/(const Real& o) const { Real r(prec2(o)); mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
    bool operator==(const Real& o) const { return mpfr_equal_p(v_, o.v_) != 0; }
    bool operator!=(const Real& o) const { return !(*this == o); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    Real abs() const { Real r(precision()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    Real sqrt() const { Real r(precision()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    Real sin() const { Real r(precision()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    Real cos() const { Real r(precision()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    Real pow_ui(unsigned long e) const { Real r(precision()); mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN); return r; }
    Real square() const { Real r(precision()); mpfr_sqr(r.v_, v_, MPFR_RNDN); return r; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    // Base-2 exponent of the value (0 for zero); |x| in [2^(e-1), 2^e).
    long exponent2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

    BigInt round_to_integer() const {
        Real r(precision());
        mpfr_round(r.v_, v_);
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), r.v_, MPFR_RNDN);
        return z;
    }

    // Deterministic decimal rendering with the given significant digit count.
    std::string to_string(int digits = 17) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    unsigned prec2(const Real& o) const {
        return std::max(precision(), o.precision());
    }
    mpfr_t v_;
};

// |a - b| <= tol * max(1, |a|, |b|)
bool approx_equal(const Real& a, const Real& b, double tol);
// max over pairs of |a-b| / max(1, |a|, |b|)
double relative_deviation(const Real& a, const Real& b);

}  // namespace gridmono
