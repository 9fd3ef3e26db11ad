#include "gridmono/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace gridmono {

namespace {

struct PrecisionState {
    unsigned bits;
    bool from_env;
};

PrecisionState& precision_state() {
    static PrecisionState state = [] {
        PrecisionState s{192, false};
        if (const char* env = std::getenv("GRIDMONO_PRECISION_BITS")) {
            char* end = nullptr;
            long parsed = std::strtol(env, &end, 10);
            if (end && *end == '\0' && parsed >= 16 && parsed <= 1 << 20) {
                s.bits = static_cast<unsigned>(parsed);
                s.from_env = true;
            }
        }
        return s;
    }();
    return state;
}

}  // namespace

unsigned default_precision_bits() { return precision_state().bits; }

void set_default_precision_bits(unsigned bits) {
    precision_state().bits = std::max(16u, bits);
}

bool precision_overridden_by_env() { return precision_state().from_env; }

Real Real::pi(unsigned bits) {
    Real r(bits ? bits : default_precision_bits());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    // strip trailing zeros of the significand, keep at least one digit
    size_t last = d.find_last_not_of('0');
    d = d.substr(0, std::max<size_t>(last + 1, 1));
    std::string out;
    long e = static_cast<long>(exp);  // value = 0.d * 10^e
    if (e >= 1 && e <= digits + 3 && static_cast<size_t>(e) >= d.size()) {
        out = d + std::string(e - d.size(), '0');
    } else if (e >= 1 && e <= digits + 3) {
        out = d.substr(0, e) + "." + d.substr(e);
    } else if (e <= 0 && e > -4) {
        out = "0." + std::string(-e, '0') + d;
    } else {
        out = d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    return neg ? "-" + out : out;
}

bool approx_equal(const Real& a, const Real& b, double tol) {
    if (a == b) return true;
    Real diff = (a - b).abs();
    Real scale(1L, a.precision());
    if (a.abs() > scale) scale = a.abs();
    if (b.abs() > scale) scale = b.abs();
    return diff <= scale * Real(tol);
}

double relative_deviation(const Real& a, const Real& b) {
    if (a == b) return 0.0;
    Real diff = (a - b).abs();
    Real scale(1L, a.precision());
    if (a.abs() > scale) scale = a.abs();
    if (b.abs() > scale) scale = b.abs();
    return (diff / scale).to_double();
}

}  // namespace gridmono
