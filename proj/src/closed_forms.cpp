#include "gridmono/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gridmono/errors.hpp"

namespace gridmono {

std::string to_string(FormulaId id) {
    switch (id) {
        case FormulaId::Dimer2DFree: return "dimer2d-free";
        case FormulaId::Dimer2DCyl: return "dimer2d-cylinder";
        case FormulaId::Dimer2DTor: return "dimer2d-torus";
        case FormulaId::Dimer2DMob: return "dimer2d-moebius";
        case FormulaId::Dimer2DKlein: return "dimer2d-klein";
        case FormulaId::MD_Free: return "md-free";
        case FormulaId::MD_Cyl: return "md-cylindrical";
        case FormulaId::MD_Mixed: return "md-mixed";
        case FormulaId::MD_Tor: return "md-toroidal";
        case FormulaId::MD_Mob3: return "md-moebius3";
        case FormulaId::MD_Klein3: return "md-klein3";
    }
    return "?";
}

std::optional<FormulaId> formula_for_spec(const GridSpec& spec) {
    const int d = spec.dimension();
    switch (spec.mode) {
        case Mode::Free: return FormulaId::MD_Free;
        case Mode::Toroidal: return FormulaId::MD_Tor;
        case Mode::Cylindrical:
            if (spec.ell == d) return FormulaId::MD_Tor;
            if (spec.ell == 1) return FormulaId::MD_Cyl;
            return FormulaId::MD_Mixed;
        case Mode::Moebius: return d == 3 ? std::optional(FormulaId::MD_Mob3) : std::nullopt;
        case Mode::Klein: return d == 3 ? std::optional(FormulaId::MD_Klein3) : std::nullopt;
    }
    return std::nullopt;
}

std::optional<FormulaId> dimer_formula_for_spec(const GridSpec& spec) {
    if (spec.dimension() != 2) return std::nullopt;
    switch (spec.mode) {
        case Mode::Free: return FormulaId::Dimer2DFree;
        case Mode::Cylindrical: return spec.ell == 1 ? std::optional(FormulaId::Dimer2DCyl)
                                                     : std::optional(FormulaId::Dimer2DTor);
        case Mode::Toroidal: return FormulaId::Dimer2DTor;
        case Mode::Moebius: return FormulaId::Dimer2DMob;
        case Mode::Klein: return FormulaId::Dimer2DKlein;
    }
    return std::nullopt;
}

namespace {

// Per-axis trigonometric factor family.
enum class Trig { FreeCos, CycSin, TwistSin };

// 4 a^2 cos^2(i pi / (2m+1)), 4 a^2 sin^2((2i-1) pi / 2m), or
// 4 a^2 sin^2((4i-1) pi / 4m) for i = 1..m.
std::vector<Real> axis_factors(Trig kind, int m, const Rational& a, const Real& pi) {
    std::vector<Real> out;
    out.reserve(m);
    Real a2 = Real(a).square() * Real(4L);
    for (int i = 1; i <= m; ++i) {
        Real angle;
        switch (kind) {
            case Trig::FreeCos: angle = pi * Real(static_cast<long>(i)) / Real(static_cast<long>(2 * m + 1)); break;
            case Trig::CycSin: angle = pi * Real(static_cast<long>(2 * i - 1)) / Real(static_cast<long>(2 * m)); break;
            case Trig::TwistSin: angle = pi * Real(static_cast<long>(4 * i - 1)) / Real(static_cast<long>(4 * m)); break;
        }
        Real t = kind == Trig::FreeCos ? angle.cos() : angle.sin();
        out.push_back(a2 * t.square());
    }
    return out;
}

struct FormulaShape {
    std::vector<Trig> kinds;  // one per axis
    unsigned long exponent;
    bool uses_x;
};

FormulaShape shape_for(FormulaId id, const GridSpec& spec) {
    const int d = spec.dimension();
    auto need_d = [&](int want) {
        if (d != want)
            throw UnsupportedError(to_string(id) + " needs d = " + std::to_string(want) +
                                   ", got d = " + std::to_string(d));
    };
    FormulaShape s;
    s.uses_x = true;
    s.exponent = 1;
    for (int i = 0; i < d; ++i) s.kinds.push_back(Trig::FreeCos);
    switch (id) {
        case FormulaId::Dimer2DFree:
            need_d(2);
            s.uses_x = false;
            break;
        case FormulaId::Dimer2DCyl:
            need_d(2);
            s.uses_x = false;
            s.kinds[0] = Trig::CycSin;
            break;
        case FormulaId::Dimer2DTor:
            need_d(2);
            s.uses_x = false;
            s.kinds = {Trig::CycSin, Trig::CycSin};
            break;
        case FormulaId::Dimer2DMob:
            need_d(2);
            s.uses_x = false;
            s.kinds[0] = Trig::TwistSin;
            break;
        case FormulaId::Dimer2DKlein:
            need_d(2);
            s.uses_x = false;
            s.kinds = {Trig::TwistSin, Trig::CycSin};
            break;
        case FormulaId::MD_Free:
            s.exponent = 1ul << (d - 1);
            break;
        case FormulaId::MD_Cyl:
            s.kinds[0] = Trig::CycSin;
            s.exponent = 1ul << (d - 1);
            break;
        case FormulaId::MD_Mixed: {
            const int ell = spec.mode == Mode::Cylindrical ? spec.ell
                            : spec.mode == Mode::Toroidal  ? d
                                                           : -1;
            if (ell < 1)
                throw UnsupportedError("md-mixed needs a cylindrical spec");
            for (int i = 0; i < ell; ++i) s.kinds[i] = Trig::CycSin;
            s.exponent = 1ul << (d - 1);
            break;
        }
        case FormulaId::MD_Tor:
            for (auto& k : s.kinds) k = Trig::CycSin;
            s.exponent = 1ul << (d - 1);
            break;
        case FormulaId::MD_Mob3:
            need_d(3);
            s.kinds = {Trig::TwistSin, Trig::FreeCos, Trig::FreeCos};
            s.exponent = 4;
            break;
        case FormulaId::MD_Klein3:
            need_d(3);
            s.kinds = {Trig::TwistSin, Trig::CycSin, Trig::CycSin};
            s.exponent = 4;
            break;
    }
    return s;
}

}  // namespace

PartitionValue eval_formula(FormulaId id, const GridSpec& spec, const WeightSpec& w,
                            unsigned bits) {
    spec.validate();
    w.validate(spec);
    if (!spec.all_dims_even())
        throw UnsupportedError("closed forms need even side lengths; got odd dims");
    if (bits == 0) bits = default_precision_bits();
    const int d = spec.dimension();
    const FormulaShape shape = shape_for(id, spec);

    const Real pi = Real::pi(bits);
    std::vector<std::vector<Real>> per_axis(d);
    std::vector<int> m(d);
    for (int q = 0; q < d; ++q) {
        m[q] = spec.dims[q] / 2;
        per_axis[q] = axis_factors(shape.kinds[q], m[q], w.a[q], pi);
    }
    Real x2 = shape.uses_x ? Real(w.x, bits).square() : Real(0L, bits);

    // all factors, then a stable ascending-magnitude product
    std::vector<Real> factors;
    std::vector<int> idx(d, 0);
    for (;;) {
        Real f = x2;
        for (int q = 0; q < d; ++q) f += per_axis[q][idx[q]];
        factors.push_back(std::move(f));
        int q = 0;
        while (q < d && ++idx[q] == m[q]) idx[q++] = 0;
        if (q == d) break;
    }
    std::sort(factors.begin(), factors.end());
    Real product(1L, bits);
    for (const Real& f : factors) product *= f;
    product = product.pow_ui(shape.exponent);

    PartitionValue out = PartitionValue::of_real(
        Method::Formula, std::move(product),
        static_cast<double>(factors.size() * shape.exponent + 8) * std::ldexp(1.0, -static_cast<int>(bits)),
        spec, w);
    return out;
}

bool check_cyl_moebius_relation(int n1, int n2, int n3, const WeightSpec& w, double rel_tol) {
    if (n1 < 1 || n2 < 1 || n3 < 1) throw SpecError("relation needs n_i >= 1");
    GridSpec cyl{{4 * n1, 2 * n2, 2 * n3}, Mode::Cylindrical, 1};
    GridSpec mob{{2 * n1, 2 * n2, 2 * n3}, Mode::Moebius, 0};
    unsigned bits = std::max(default_precision_bits(), 256u);
    Real lhs = eval_formula(FormulaId::MD_Cyl, cyl, w, bits).real;
    Real rhs = eval_formula(FormulaId::MD_Mob3, mob, w, bits).real.square();
    // re-evaluate with enough headroom to round both sides to exact integers
    long magnitude = std::max(lhs.exponent2(), rhs.exponent2());
    if (magnitude + 64 > static_cast<long>(bits)) {
        bits = static_cast<unsigned>(magnitude + 64);
        lhs = eval_formula(FormulaId::MD_Cyl, cyl, w, bits).real;
        rhs = eval_formula(FormulaId::MD_Mob3, mob, w, bits).real.square();
    }
    auto li = round_if_near_integer(lhs, 1e-20);
    auto ri = round_if_near_integer(rhs, 1e-20);
    if (li && ri) return *li == *ri;
    return approx_equal(lhs, rhs, rel_tol);
}

std::optional<BigInt> round_if_near_integer(const Real& v, double tol) {
    BigInt nearest = v.round_to_integer();
    Real diff = (v - Real(Rational(nearest))).abs();
    Real scale(1L);
    if (v.abs() > scale) scale = v.abs();
    if (diff <= scale * Real(tol)) return nearest;
    return std::nullopt;
}

}  // namespace gridmono
