#include "gridmono/det.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gridmono/errors.hpp"

namespace gridmono {

namespace {

// Clears denominators row by row. Returns the integer matrix and the
// product of the row scales.
struct ScaledInts {
    int n = 0;
    std::vector<mpz_class> e;
    mpz_class scale = 1;
    mpz_class& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
};

ScaledInts scale_to_integers(const RatMatrix& m) {
    ScaledInts s;
    s.n = m.order();
    s.e.resize(static_cast<std::size_t>(s.n) * s.n);
    mpz_class lcm_row;
    for (int i = 0; i < s.n; ++i) {
        lcm_row = 1;
        for (int j = 0; j < s.n; ++j)
            mpz_lcm(lcm_row.get_mpz_t(), lcm_row.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < s.n; ++j) {
            const Rational& q = m.at(i, j);
            mpz_class f = lcm_row / q.get_den();
            s.at(i, j) = q.get_num() * f;
        }
        s.scale *= lcm_row;
    }
    return s;
}

// One Bareiss update sweep for rows (k+1..n-1); prev divides exactly.
template <bool Parallel>
void bareiss_sweep(ScaledInts& M, int k, const mpz_class& prev) {
    const int n = M.n;
    mpz_srcptr piv = M.at(k, k).get_mpz_t();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && n - k > 48)
#endif
    for (int i = k + 1; i < n; ++i) {
        mpz_t t;
        mpz_init(t);
        mpz_srcptr lik = M.at(i, k).get_mpz_t();
        for (int j = k + 1; j < n; ++j) {
            mpz_ptr mij = M.at(i, j).get_mpz_t();
            mpz_mul(mij, mij, piv);
            mpz_mul(t, lik, M.at(k, j).get_mpz_t());
            mpz_sub(mij, mij, t);
            mpz_divexact(mij, mij, prev.get_mpz_t());
        }
        mpz_clear(t);
    }
}

template <bool Parallel>
Rational det_bareiss(const RatMatrix& m) {
    const int n = m.order();
    if (n == 0) return 1;
    ScaledInts M = scale_to_integers(m);
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            int r = k + 1;
            while (r < n && M.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (int j = 0; j < n; ++j) mpz_swap(M.at(k, j).get_mpz_t(), M.at(r, j).get_mpz_t());
            sign = -sign;
        }
        bareiss_sweep<Parallel>(M, k, prev);
        prev = M.at(k, k);
    }
    Rational det(M.at(n - 1, n - 1) * sign, M.scale);
    det.canonicalize();
    return det;
}

}  // namespace

Rational det_exact_serial(const RatMatrix& m) { return det_bareiss<false>(m); }
Rational det_exact_parallel(const RatMatrix& m) { return det_bareiss<true>(m); }

Rational det_exact(const RatMatrix& m) {
#ifdef _OPENMP
    if (omp_get_max_threads() > 1 && m.order() >= 64) return det_exact_parallel(m);
#endif
    return det_exact_serial(m);
}

namespace {

RealDet det_lu_long_double(const RatMatrix& m) {
    const int n = m.order();
    std::vector<long double> a(static_cast<std::size_t>(n) * n);
    {
        mpfr_t conv;
        mpfr_init2(conv, 64);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpfr_set_q(conv, m.at(i, j).get_mpq_t(), MPFR_RNDN);
                a[static_cast<std::size_t>(i) * n + j] = mpfr_get_ld(conv, MPFR_RNDN);
            }
        mpfr_clear(conv);
    }
    auto at = [&](int i, int j) -> long double& { return a[static_cast<std::size_t>(i) * n + j]; };
    int sign = 1;
    long double det = 1.0L;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(at(i, k)) > std::fabs(at(p, k))) p = i;
        if (at(p, k) == 0.0L) return {Real(0L), 0.0, 64};
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        det *= at(k, k);
        const long double inv = 1.0L / at(k, k);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n - k > 128)
#endif
        for (int i = k + 1; i < n; ++i) {
            const long double f = at(i, k) * inv;
            for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    RealDet out;
    out.value = Real(0L);
    mpfr_set_ld(out.value.raw(), det * sign, MPFR_RNDN);
    out.precision_bits = 64;
    out.rel_error_bound = 10.0 * n * n * std::ldexp(1.0, -64);
    return out;
}

RealDet det_lu_mpfr(const RatMatrix& m, unsigned bits) {
    const int n = m.order();
    std::vector<Real> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.emplace_back(m.at(i, j), bits);
    auto at = [&](int i, int j) -> Real& { return a[static_cast<std::size_t>(i) * n + j]; };
    int sign = 1;
    Real det(1L, bits);
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (at(i, k).abs() > at(p, k).abs()) p = i;
        if (at(p, k).is_zero()) return {Real(0L, bits), 0.0, bits};
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        det *= at(k, k);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n - k > 64)
#endif
        for (int i = k + 1; i < n; ++i) {
            Real f = at(i, k) / at(k, k);
            for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    if (sign < 0) det = -det;
    RealDet out;
    out.value = std::move(det);
    out.precision_bits = bits;
    out.rel_error_bound = 10.0 * n * n * std::ldexp(1.0, -static_cast<int>(bits));
    return out;
}

}  // namespace

RealDet det_real(const RatMatrix& m, unsigned bits) {
    if (bits == 0) {
        if (precision_overridden_by_env())
            bits = default_precision_bits();
        else
            bits = m.order() <= 256 ? 64 : 128;
    }
    if (bits <= 64 && m.order() <= 256) return det_lu_long_double(m);
    return det_lu_mpfr(m, bits);
}

namespace {

void check_pfaffian_input(const RatMatrix& a) {
    const int n = a.order();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian needs even order");
    for (int i = 0; i < n; ++i) {
        if (a.at(i, i) != 0) throw std::invalid_argument("pfaffian needs zero diagonal");
        for (int j = i + 1; j < n; ++j)
            if (a.at(i, j) != -a.at(j, i))
                throw std::invalid_argument("pfaffian needs an antisymmetric matrix");
    }
}

// First-row expansion over index subsets, memoised on the bitmask.
Rational pf_expand(const RatMatrix& a, std::uint32_t mask,
                   std::unordered_map<std::uint32_t, Rational>& memo) {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int i = __builtin_ctz(mask);
    std::uint32_t rest = mask & ~(1u << i);
    Rational sum = 0;
    int t = 0;
    for (std::uint32_t bits = rest; bits; bits &= bits - 1, ++t) {
        const int j = __builtin_ctz(bits);
        const Rational& aij = a.at(i, j);
        if (aij != 0) {
            Rational sub = pf_expand(a, rest & ~(1u << j), memo);
            if (t % 2 == 0)
                sum += aij * sub;
            else
                sum -= aij * sub;
        }
    }
    memo.emplace(mask, sum);
    return sum;
}

// Skew-symmetric elimination (Parlett-Reid style) with exact rationals.
Rational pf_eliminate(RatMatrix a) {
    const int n = a.order();
    Rational result = 1;
    for (int k = 0; k + 1 < n; k += 2) {
        if (a.at(k, k + 1) == 0) {
            int r = k + 2;
            while (r < n && a.at(k, r) == 0) ++r;
            if (r == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k + 1, j), a.at(r, j));
            for (int i = 0; i < n; ++i) std::swap(a.at(i, k + 1), a.at(i, r));
            result = -result;
        }
        const Rational p = a.at(k, k + 1);
        result *= p;
        for (int i = k + 2; i < n; ++i) {
            const Rational ui = a.at(k, i);
            const Rational vi = a.at(k + 1, i);
            if (ui == 0 && vi == 0) continue;
            for (int j = i + 1; j < n; ++j) {
                // skew Schur update: A[i][j] -= (u_i v_j - v_i u_j) / p
                Rational delta = (ui * a.at(k + 1, j) - vi * a.at(k, j)) / p;
                if (delta != 0) {
                    a.at(i, j) -= delta;
                    a.at(j, i) += delta;
                }
            }
        }
    }
    return result;
}

}  // namespace

Rational pfaffian_exact(const RatMatrix& a) {
    check_pfaffian_input(a);
    const int n = a.order();
    if (n == 0) return 1;
    if (n <= 16) {
        std::unordered_map<std::uint32_t, Rational> memo;
        return pf_expand(a, (1u << n) - 1u, memo);
    }
    return pf_eliminate(a);
}

}  // namespace gridmono
