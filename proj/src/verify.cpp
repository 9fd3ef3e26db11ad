#include "gridmono/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "gridmono/closed_forms.hpp"
#include "gridmono/det.hpp"
#include "gridmono/oracle.hpp"

namespace gridmono {

bool SuiteResult::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
}

std::size_t SuiteResult::failed_count() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return !c.pass; }));
}

void SuiteResult::add(std::string name, bool pass, std::string detail) {
    cases.push_back({std::move(name), pass, std::move(detail)});
}

WeightSpec random_weights(int d, unsigned seed, int max_num, int max_den, bool zero_x) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    WeightSpec w;
    w.x = zero_x ? Rational(0) : Rational(num(rng), den(rng));
    w.x.canonicalize();
    for (int i = 0; i < d; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        w.a.push_back(q);
    }
    return w;
}

namespace {

void tuples_rec(int min_entry, int len, long cap, std::vector<int>& cur,
                std::vector<std::vector<int>>& out, int step) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int n = min_entry; n <= cap; n += step) {
        cur.push_back(n);
        tuples_rec(min_entry, len, cap / n, cur, out, step);
        cur.pop_back();
    }
}

std::string spec_name(const GridSpec& s) {
    std::ostringstream os;
    os << s.mode_string() << "[";
    for (std::size_t i = 0; i < s.dims.size(); ++i) os << (i ? "," : "") << s.dims[i];
    os << "]";
    return os.str();
}

std::string weights_name(const WeightSpec& w) {
    std::ostringstream os;
    os << "x=" << rational_to_string(w.x) << " a=(";
    for (std::size_t i = 0; i < w.a.size(); ++i)
        os << (i ? "," : "") << rational_to_string(w.a[i]);
    os << ")";
    return os.str();
}

}  // namespace

std::vector<std::vector<int>> dims_tuples(int min_entry, int max_d, long max_product) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int d = 1; d <= max_d; ++d) tuples_rec(min_entry, d, max_product, cur, out, 1);
    return out;
}

std::vector<std::vector<int>> even_dims_tuples(int max_d, long max_product) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int d = 1; d <= max_d; ++d) tuples_rec(2, d, max_product, cur, out, 2);
    return out;
}

SuiteResult suite_small(long max_vertices) {
    SuiteResult res{"small", {}};
    std::vector<GridSpec> specs;
    for (auto& dims : dims_tuples(1, 4, max_vertices))
        specs.push_back(GridSpec{dims, Mode::Free, 0});
    for (auto& dims : dims_tuples(2, 3, max_vertices)) {
        specs.push_back(GridSpec{dims, Mode::Cylindrical, 1});
        specs.push_back(GridSpec{dims, Mode::Toroidal, 0});
        if (dims.size() == 2 || dims.size() == 3)
            specs.push_back(GridSpec{dims, Mode::Moebius, 0});
        if (dims.size() == 3) specs.push_back(GridSpec{dims, Mode::Klein, 0});
    }
    unsigned seed = 1;
    for (const GridSpec& spec : specs) {
        OrientedGrid grid = build_grid(spec);
        for (int t = 0; t < 3; ++t) {
            WeightSpec w = random_weights(spec.dimension(), seed++);
            Rational det = det_exact(build_K_from_graph(grid, w));
            Rational lv = enumerate_loop_vertex(grid, w).exact;
            res.add(spec_name(spec) + " " + weights_name(w), det == lv,
                    "det=" + rational_to_string(det) + " enum=" + rational_to_string(lv));
        }
    }
    return res;
}

namespace {

struct FormulaInstance {
    FormulaId id;
    GridSpec spec;
    bool dimer;  // x = 0, compare det against formula^2
};

std::vector<FormulaInstance> formula_instances(long cap) {
    std::vector<FormulaInstance> out;
    auto evens = [&](int max_d) { return even_dims_tuples(max_d, cap); };
    for (auto& dims : evens(8)) {
        out.push_back({FormulaId::MD_Free, GridSpec{dims, Mode::Free, 0}, false});
        out.push_back({FormulaId::MD_Cyl, GridSpec{dims, Mode::Cylindrical, 1}, false});
        out.push_back({FormulaId::MD_Tor, GridSpec{dims, Mode::Toroidal, 0}, false});
        const int d = static_cast<int>(dims.size());
        for (int ell = 2; ell < d; ++ell)
            out.push_back({FormulaId::MD_Mixed, GridSpec{dims, Mode::Cylindrical, ell}, false});
        if (d == 3) {
            out.push_back({FormulaId::MD_Mob3, GridSpec{dims, Mode::Moebius, 0}, false});
            out.push_back({FormulaId::MD_Klein3, GridSpec{dims, Mode::Klein, 0}, false});
        }
        if (d == 2) {
            out.push_back({FormulaId::Dimer2DFree, GridSpec{dims, Mode::Free, 0}, true});
            out.push_back({FormulaId::Dimer2DCyl, GridSpec{dims, Mode::Cylindrical, 1}, true});
            out.push_back({FormulaId::Dimer2DTor, GridSpec{dims, Mode::Toroidal, 0}, true});
            out.push_back({FormulaId::Dimer2DMob, GridSpec{dims, Mode::Moebius, 0}, true});
            out.push_back({FormulaId::Dimer2DKlein, GridSpec{dims, Mode::Klein, 0}, true});
        }
    }
    return out;
}

// Formula value with enough precision to compare against an exact integer
// determinant by rounding.
bool formula_rounds_to(const FormulaInstance& inst, const WeightSpec& w, const Rational& det) {
    if (det.get_den() != 1) return false;
    unsigned bits = static_cast<unsigned>(
        std::max<std::size_t>(192, mpz_sizeinbase(det.get_num().get_mpz_t(), 2) + 64));
    Real f = eval_formula(inst.id, inst.spec, w, bits).real;
    if (inst.dimer) f = f.square();
    return f.round_to_integer() == det.get_num();
}

double formula_vs_real_dev(const FormulaInstance& inst, const WeightSpec& w, const RealDet& det) {
    Real f = eval_formula(inst.id, inst.spec, w).real;
    if (inst.dimer) f = f.square();
    return relative_deviation(f, det.value);
}

}  // namespace

SuiteResult suite_formulas(long max_vertices, long exact_cap) {
    SuiteResult res{"formulas", {}};
    auto instances = formula_instances(max_vertices);

    // largest instance per family gets the exact treatment even past the cap
    std::map<FormulaId, std::size_t> boundary;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        long n = instances[i].spec.vertex_count();
        if (n <= exact_cap) continue;
        auto it = boundary.find(instances[i].id);
        if (it == boundary.end() || instances[it->second].spec.vertex_count() < n)
            boundary[instances[i].id] = i;
    }

    unsigned seed = 1000;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const FormulaInstance& inst = instances[i];
        const long n = inst.spec.vertex_count();
        OrientedGrid grid = build_grid(inst.spec);
        WeightSpec unit = WeightSpec::unit(inst.spec.dimension());
        WeightSpec rational = random_weights(inst.spec.dimension(), seed++, 4, 4, inst.dimer);
        if (inst.dimer) unit.x = 0;
        const std::string base = to_string(inst.id) + " " + spec_name(inst.spec);

        auto bit = boundary.find(inst.id);
        bool exact_here = n <= exact_cap || (bit != boundary.end() && bit->second == i);
        if (exact_here) {
            Rational det = det_exact(build_K_from_graph(grid, unit));
            res.add(base + " unit exact", formula_rounds_to(inst, unit, det),
                    "det=" + rational_to_string(det));
        } else {
            RealDet det = det_real(build_K_from_graph(grid, unit));
            double dev = formula_vs_real_dev(inst, unit, det);
            res.add(base + " unit", dev <= 1e-8, "rel_dev=" + std::to_string(dev));
        }
        // one rational weight tuple in [1/4, 4]
        if (n <= exact_cap) {
            Rational det = det_exact(build_K_from_graph(grid, rational));
            Real f = eval_formula(inst.id, inst.spec, rational).real;
            if (inst.dimer) f = f.square();
            double dev = relative_deviation(f, Real(det));
            res.add(base + " " + weights_name(rational), dev <= 1e-8,
                    "rel_dev=" + std::to_string(dev));
        } else {
            RealDet det = det_real(build_K_from_graph(grid, rational));
            double dev = formula_vs_real_dev(inst, rational, det);
            res.add(base + " " + weights_name(rational), dev <= 1e-8,
                    "rel_dev=" + std::to_string(dev));
        }
    }

    // mixed-family consistency: l = d matches the toroidal product and
    // l = 1 the cylindrical one, factor for factor
    for (auto& dims : even_dims_tuples(4, 64)) {
        const int d = static_cast<int>(dims.size());
        if (d < 2) continue;
        WeightSpec w = random_weights(d, seed++, 4, 4);
        GridSpec tor{dims, Mode::Toroidal, 0};
        GridSpec cyl_d{dims, Mode::Cylindrical, d};
        GridSpec cyl_1{dims, Mode::Cylindrical, 1};
        Real a = eval_formula(FormulaId::MD_Mixed, cyl_d, w).real;
        Real b = eval_formula(FormulaId::MD_Tor, tor, w).real;
        Real c = eval_formula(FormulaId::MD_Mixed, cyl_1, w).real;
        Real e = eval_formula(FormulaId::MD_Cyl, cyl_1, w).real;
        res.add("mixed-consistency " + spec_name(tor), a == b && c == e);
    }
    return res;
}

SuiteResult suite_counterexamples() {
    SuiteResult res{"counterexamples", {}};
    const std::vector<int> dims{2, 2, 2, 2};

    auto poly_mob = [](const WeightSpec& w) {
        Rational s0 = w.a[0] * w.a[0], s1 = w.a[1] * w.a[1];
        Rational s2 = w.a[2] * w.a[2], s3 = w.a[3] * w.a[3];
        Rational f1 = 4 * s0 + s1 + s2 + s3, f2 = s1 + s2 + s3;
        Rational out = 1;
        for (int i = 0; i < 4; ++i) out *= f1 * f2;
        return out;
    };
    auto poly_klein = [](const WeightSpec& w) {
        Rational s0 = w.a[0] * w.a[0], s1 = w.a[1] * w.a[1];
        Rational s2 = w.a[2] * w.a[2], s3 = w.a[3] * w.a[3];
        Rational f1 = s0 + s1 + s2 + s3, f2 = s1 + s2 + s3;
        Rational out = 65536;  // 2^16
        for (int i = 0; i < 4; ++i) out *= f1 * f2;
        return out;
    };

    OrientedGrid mob = build_grid(GridSpec{dims, Mode::Moebius, 0});
    OrientedGrid klein = build_grid(GridSpec{dims, Mode::Klein, 0});
    for (unsigned t = 0; t < 5; ++t) {
        WeightSpec w = random_weights(4, 321 + t, 8, 4, /*zero_x=*/true);
        Rational dm = det_exact(build_K_from_graph(mob, w));
        Rational dk = det_exact(build_K_from_graph(klein, w));
        res.add("moebius4d " + weights_name(w), dm == poly_mob(w),
                "det=" + rational_to_string(dm));
        res.add("klein4d " + weights_name(w), dk == poly_klein(w),
                "det=" + rational_to_string(dk));
    }
    WeightSpec unit = WeightSpec::unit(4);
    unit.x = 0;
    Rational dm = det_exact(build_K_from_graph(mob, unit));
    res.add("moebius4d unit value", dm == 194481, "det=" + rational_to_string(dm));
    res.add("moebius4d value is not an 8th power", !is_rational_8th_power(dm));
    Rational dk = det_exact(build_K_from_graph(klein, unit));
    res.add("klein4d unit value", dk == Rational(65536) * 256 * 81,
            "det=" + rational_to_string(dk));
    return res;
}

SuiteResult suite_relation() {
    SuiteResult res{"relation", {}};
    const int tuples[4][3] = {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    unsigned seed = 77;
    for (auto [n1, n2, n3] : tuples) {
        WeightSpec unit = WeightSpec::unit(3);
        res.add("relation (" + std::to_string(n1) + "," + std::to_string(n2) + "," +
                    std::to_string(n3) + ") unit",
                check_cyl_moebius_relation(n1, n2, n3, unit));
        WeightSpec w = random_weights(3, seed++, 4, 4);
        res.add("relation (" + std::to_string(n1) + "," + std::to_string(n2) + "," +
                    std::to_string(n3) + ") " + weights_name(w),
                check_cyl_moebius_relation(n1, n2, n3, w));
    }
    return res;
}

SuiteResult suite_dimer() {
    SuiteResult res{"dimer", {}};
    const std::vector<std::vector<int>> sizes{{2, 2}, {2, 4}, {4, 2}, {4, 4}};
    const std::vector<std::pair<Mode, int>> modes{{Mode::Free, 0},
                                                  {Mode::Cylindrical, 1},
                                                  {Mode::Toroidal, 0},
                                                  {Mode::Moebius, 0},
                                                  {Mode::Klein, 0}};
    for (auto [mode, ell] : modes) {
        for (const auto& dims : sizes) {
            GridSpec spec{dims, mode, ell};
            OrientedGrid grid = build_grid(spec);
            for (int asym = 0; asym < 2; ++asym) {
                WeightSpec w = WeightSpec::unit(2);
                w.x = 0;
                if (asym) w.a[1] = 2;
                Rational pm = enumerate_perfect_matchings(grid, w).exact;
                Rational pf = abs(pfaffian_exact(build_K_from_graph(grid, w)));
                auto id = dimer_formula_for_spec(spec);
                Real f = eval_formula(*id, spec, w).real;
                auto fi = round_if_near_integer(f, 1e-9);
                bool pass = fi && pm == pf && pm.get_den() == 1 && pm.get_num() == *fi;
                res.add(spec_name(spec) + (asym ? " a=(1,2)" : " a=(1,1)"), pass,
                        "enum=" + rational_to_string(pm) + " |Pf|=" + rational_to_string(pf) +
                            " formula=" + (fi ? fi->get_str() : f.to_string()));
            }
        }
    }
    // anchors for the free family
    {
        WeightSpec w = WeightSpec::unit(2);
        w.x = 0;
        Rational pm22 = enumerate_perfect_matchings(build_grid(GridSpec{{2, 2}, Mode::Free, 0}), w).exact;
        Rational pm44 = enumerate_perfect_matchings(build_grid(GridSpec{{4, 4}, Mode::Free, 0}), w).exact;
        res.add("free[2,2] has 2 matchings", pm22 == 2, rational_to_string(pm22));
        res.add("free[4,4] has 36 matchings", pm44 == 36, rational_to_string(pm44));
    }
    return res;
}

SuiteResult suite_orientation(long max_vertices, long det_boundary) {
    SuiteResult res{"orientation", {}};

    // odd orientation across every twisted spec (any parity of sides)
    for (auto& dims : dims_tuples(2, 8, max_vertices)) {
        if (dims.size() < 2) continue;
        for (Mode mode : {Mode::Moebius, Mode::Klein}) {
            GridSpec spec{dims, mode, 0};
            OrientedGrid grid = build_grid(spec);
            res.add("odd-orientation " + spec_name(spec), verify_odd_orientation(grid));
        }
    }

    // d = 3 dashed sign pattern equals its Kronecker form
    for (auto& dims : even_dims_tuples(3, max_vertices)) {
        if (dims.size() != 3) continue;
        GridSpec spec{dims, Mode::Moebius, 0};
        OrientedGrid grid = build_grid(spec);
        res.add("dashed-pattern " + spec_name(spec),
                dashed_contribution(grid, 1) == twisted_term_kronecker(spec, 1));
    }

    // the two builders produce the same matrix entry for entry
    unsigned seed = 4242;
    auto check_equal = [&](const GridSpec& spec) {
        WeightSpec w = random_weights(spec.dimension(), seed++, 4, 4);
        OrientedGrid grid = build_grid(spec);
        SignedMatrix a = build_K_from_graph(grid, w);
        SignedMatrix b = build_K_kronecker(spec, w);
        res.add("builders-match " + spec_name(spec), a.m == b.m);
    };
    for (auto& dims : even_dims_tuples(8, max_vertices)) {
        const int d = static_cast<int>(dims.size());
        check_equal(GridSpec{dims, Mode::Free, 0});
        for (int ell = 1; ell <= d; ++ell) check_equal(GridSpec{dims, Mode::Cylindrical, ell});
        check_equal(GridSpec{dims, Mode::Toroidal, 0});
        if (d == 3) {
            check_equal(GridSpec{dims, Mode::Moebius, 0});
            check_equal(GridSpec{dims, Mode::Klein, 0});
        }
    }

    // determinant agreement at the size boundary, both builders evaluated
    std::vector<GridSpec> boundary;
    boundary.push_back(GridSpec{{static_cast<int>(det_boundary)}, Mode::Free, 0});
    boundary.push_back(GridSpec{{static_cast<int>(det_boundary)}, Mode::Cylindrical, 1});
    if (det_boundary == 512) {
        boundary.push_back(GridSpec{{8, 8, 8}, Mode::Free, 0});
        boundary.push_back(GridSpec{{8, 8, 8}, Mode::Moebius, 0});
        boundary.push_back(GridSpec{{8, 8, 8}, Mode::Klein, 0});
        boundary.push_back(GridSpec{{16, 16, 2}, Mode::Toroidal, 0});
    }
    for (const GridSpec& spec : boundary) {
        WeightSpec w = random_weights(spec.dimension(), seed++, 4, 4);
        Rational dg = det_exact(build_K_from_graph(build_grid(spec), w));
        Rational dk = det_exact(build_K_kronecker(spec, w));
        res.add("builders-det " + spec_name(spec), dg == dk,
                "graph=" + rational_to_string(dg) + " kron=" + rational_to_string(dk));
    }
    return res;
}

namespace {

// Closed 3D indexing formula for even sides: the vertex (p,q,r) of the
// (2n1, 2n2, 2n3) grid, split by the parities of q and r.
long closed_3d_label(long n1, long n2, long p, long q, long r) {
    if (q % 2 == 1 && r % 2 == 1) {
        long s = (q - 1) / 2, t = (r - 1) / 2;
        return 8 * t * n1 * n2 + 4 * s * n1 + p;
    }
    if (q % 2 == 0 && r % 2 == 1) {
        long s = q / 2, t = (r - 1) / 2;
        return 8 * t * n1 * n2 + 4 * s * n1 - p + 1;
    }
    if (q % 2 == 1) {
        long s = (q - 1) / 2, t = r / 2;
        return 8 * t * n1 * n2 - 4 * s * n1 - p + 1;
    }
    long s = q / 2, t = r / 2;
    return 8 * t * n1 * n2 - 4 * s * n1 + p;
}

}  // namespace

SuiteResult suite_labelling(long max_vertices) {
    SuiteResult res{"labelling", {}};
    for (auto& dims : even_dims_tuples(3, max_vertices)) {
        if (dims.size() != 3) continue;
        const long n1 = dims[0] / 2, n2 = dims[1] / 2;
        bool ok = true;
        std::string first_bad;
        std::vector<int> c(3);
        for (c[2] = 1; c[2] <= dims[2] && ok; ++c[2])
            for (c[1] = 1; c[1] <= dims[1] && ok; ++c[1])
                for (c[0] = 1; c[0] <= dims[0] && ok; ++c[0]) {
                    long expect = closed_3d_label(n1, n2, c[0], c[1], c[2]);
                    if (boustrophedon_label(dims, c) != expect) {
                        ok = false;
                        first_bad = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) +
                                    "," + std::to_string(c[2]) + ")";
                    }
                }
        GridSpec spec{dims, Mode::Free, 0};
        res.add("labels " + spec_name(spec), ok, first_bad);
    }
    return res;
}

}  // namespace gridmono
