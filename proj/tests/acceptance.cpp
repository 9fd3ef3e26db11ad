// Acceptance suite: one numbered check per headline requirement, one
// pass/fail line each. Run with no arguments for the full suite or with a
// check number to run a single one.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "gridmono/closed_forms.hpp"
#include "gridmono/det.hpp"
#include "gridmono/oracle.hpp"
#include "gridmono/verify.hpp"

using namespace gridmono;

namespace {

struct Criterion {
    int number;
    const char* title;
    SuiteResult (*run)();
};

// 1. The 9-vertex square grid: determinant and loop-vertex enumeration both
//    equal z(8a^4 + 6a^2 z^2 + z^4)^2 at three (z, a) points, exactly.
SuiteResult criterion_q33() {
    SuiteResult res{"q33", {}};
    GridSpec spec{{3, 3}, Mode::Free, 0};
    OrientedGrid grid = build_grid(spec);
    const std::pair<int, int> points[] = {{1, 1}, {2, 1}, {1, 3}};
    for (auto [zi, ai] : points) {
        Rational z(zi), a(ai);
        Rational inner = 8 * a * a * a * a + 6 * a * a * z * z + z * z * z * z;
        Rational expect = z * inner * inner;
        WeightSpec w;
        w.x = z;
        w.a = {a, a};
        Rational det = det_exact(build_K_from_graph(grid, w));
        Rational lv = enumerate_loop_vertex(grid, w).exact;
        res.add("det z=" + std::to_string(zi) + " a=" + std::to_string(ai), det == expect,
                rational_to_string(det) + " vs " + rational_to_string(expect));
        res.add("enum z=" + std::to_string(zi) + " a=" + std::to_string(ai), lv == expect,
                rational_to_string(lv) + " vs " + rational_to_string(expect));
    }
    return res;
}

// 2. Cylindrical [4,2,2] at unit weights: determinant and closed form both
//    equal 5^8 = 390625 exactly.
SuiteResult criterion_cyl_example() {
    SuiteResult res{"cyl-example", {}};
    GridSpec spec{{4, 2, 2}, Mode::Cylindrical, 1};
    WeightSpec w = WeightSpec::unit(3);
    Rational det = det_exact(build_K_from_graph(build_grid(spec), w));
    res.add("det", det == 390625, rational_to_string(det));
    Real f = eval_formula(FormulaId::MD_Cyl, spec, w).real;
    auto r = round_if_near_integer(f, 1e-9);
    res.add("formula", r && *r == 390625, f.to_string());
    return res;
}

SuiteResult criterion_small() { return suite_small(10); }
SuiteResult criterion_formulas() { return suite_formulas(256, 96); }

SuiteResult criterion_moebius4d() {
    SuiteResult all = suite_counterexamples();
    SuiteResult res{"moebius4d", {}};
    for (auto& c : all.cases)
        if (c.name.rfind("moebius4d", 0) == 0) res.cases.push_back(std::move(c));
    return res;
}

SuiteResult criterion_klein4d() {
    SuiteResult all = suite_counterexamples();
    SuiteResult res{"klein4d", {}};
    for (auto& c : all.cases)
        if (c.name.rfind("klein4d", 0) == 0) res.cases.push_back(std::move(c));
    return res;
}

SuiteResult criterion_relation() { return suite_relation(); }
SuiteResult criterion_dimer() { return suite_dimer(); }
SuiteResult criterion_orientation() { return suite_orientation(256, 512); }
SuiteResult criterion_labelling() { return suite_labelling(4096); }

const Criterion kCriteria[] = {
    {1, "9-vertex grid loop-vertex value", criterion_q33},
    {2, "cylindrical [4,2,2] example", criterion_cyl_example},
    {3, "enumeration equals determinant on all small specs", criterion_small},
    {4, "closed forms match determinants up to N=256", criterion_formulas},
    {5, "4D moebius determinant identity", criterion_moebius4d},
    {6, "4D klein determinant identity", criterion_klein4d},
    {7, "cylindrical equals squared moebius", criterion_relation},
    {8, "dimer counts vs pfaffians vs 2D products", criterion_dimer},
    {9, "orientation and builder equivalence", criterion_orientation},
    {10, "boustrophedon labels match the closed 3D formula", criterion_labelling},
};

int run_criterion(const Criterion& c, bool verbose) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = res.all_pass();
    std::printf("criterion %02d [%s]: %s  (%zu/%zu checks, %.2f s)\n", c.number, c.title,
                pass ? "PASS" : "FAIL", res.cases.size() - res.failed_count(), res.cases.size(),
                secs);
    for (const auto& cc : res.cases)
        if (!cc.pass || verbose)
            std::printf("    %s %s  %s\n", cc.pass ? "[pass]" : "[FAIL]", cc.name.c_str(),
                        cc.detail.c_str());
    std::fflush(stdout);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    bool verbose = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "-v") == 0)
            verbose = true;
        else
            only = std::atoi(argv[i]);
    }
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.number != only) continue;
        failures += run_criterion(c, verbose);
    }
    return failures;
}
