// Command-line front end: compute partition functions by independent
// routes, run verification suites, sweep weight grids, export graphs and
// dump matrices.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridmono/closed_forms.hpp"
#include "gridmono/det.hpp"
#include "gridmono/errors.hpp"
#include "gridmono/graph_io.hpp"
#include "gridmono/oracle.hpp"
#include "gridmono/verify.hpp"

using namespace gridmono;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

WeightSpec parse_weights(const GridSpec& spec, const std::string& x_text,
                         const std::string& a_text, bool real_mode) {
    WeightSpec w;
    w.x = parse_rational(x_text);
    if (a_text.empty()) {
        w.a.assign(spec.dimension(), Rational(1));
    } else {
        for (const auto& tok : split(a_text, ',')) w.a.push_back(parse_rational(tok));
    }
    w.arithmetic = real_mode ? Arithmetic::Real : Arithmetic::Exact;
    w.validate(spec);
    return w;
}

std::string dims_x_string(const GridSpec& spec) {
    std::string s;
    for (std::size_t i = 0; i < spec.dims.size(); ++i)
        s += (i ? "x" : "") + std::to_string(spec.dims[i]);
    return s;
}

struct MethodOutcome {
    std::string method;
    std::optional<PartitionValue> value;
    std::string display;       // value or skip reason
    bool skipped = false;
};

std::string render_value(const PartitionValue& pv) {
    if (pv.arithmetic == Arithmetic::Exact) return rational_to_string(pv.exact);
    if (auto r = round_if_near_integer(pv.real, 1e-9)) return r->get_str();
    return pv.real.to_string();
}

// Runs the selected methods; "all" degrades gracefully (skip cells with a
// reason) while a single incompatible method is a hard error.
std::vector<MethodOutcome> run_methods(const GridSpec& spec, const WeightSpec& w,
                                       const std::string& method) {
    const bool all = method == "all";
    std::vector<MethodOutcome> out;
    OrientedGrid grid = build_grid(spec);

    if (all || method == "det") {
        MethodOutcome m{"det", std::nullopt, "", false};
        SignedMatrix K = build_K_from_graph(grid, w);
        if (w.arithmetic == Arithmetic::Exact) {
            m.value = PartitionValue::of_exact(Method::Det, det_exact(K), spec, w);
        } else {
            RealDet rd = det_real(K);
            m.value = PartitionValue::of_real(Method::Det, rd.value, rd.rel_error_bound, spec, w);
        }
        m.display = render_value(*m.value);
        out.push_back(std::move(m));
    }
    if (all || method == "formula") {
        MethodOutcome m{"formula", std::nullopt, "", false};
        auto id = formula_for_spec(spec);
        if (!id) {
            std::string reason = "no closed form for " + to_string(spec.mode) + " with d=" +
                                 std::to_string(spec.dimension());
            if (!all) throw UnsupportedError(reason);
            m.skipped = true;
            m.display = "skipped (" + reason + ")";
        } else if (!spec.all_dims_even()) {
            std::string reason = "closed forms need even side lengths";
            if (!all) throw UnsupportedError(reason);
            m.skipped = true;
            m.display = "skipped (" + reason + ")";
        } else {
            m.value = eval_formula(*id, spec, w);
            m.display = render_value(*m.value);
        }
        out.push_back(std::move(m));
    }
    if (all || method == "enumerate") {
        MethodOutcome m{"enumerate", std::nullopt, "", false};
        if (grid.vertex_count() > kLoopVertexCap) {
            std::string reason = "N=" + std::to_string(grid.vertex_count()) +
                                 " exceeds enumeration cap " + std::to_string(kLoopVertexCap);
            if (!all) throw CapExceededError(reason);
            m.skipped = true;
            m.display = "skipped (" + reason + ")";
        } else {
            m.value = enumerate_loop_vertex(grid, w);
            m.display = render_value(*m.value);
        }
        out.push_back(std::move(m));
    }
    return out;
}

// Largest pairwise relative deviation among computed values.
double outcome_deviation(const std::vector<MethodOutcome>& outcomes) {
    double dev = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
            if (!outcomes[i].value || !outcomes[j].value) continue;
            dev = std::max(dev, relative_deviation(outcomes[i].value->as_real(),
                                                   outcomes[j].value->as_real()));
        }
    return dev;
}

int cmd_compute(const GridSpec& spec, const WeightSpec& w, const std::string& method,
                const std::string& format, double tol) {
    auto outcomes = run_methods(spec, w, method);
    double dev = outcome_deviation(outcomes);
    bool agree = dev <= tol;

    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["spec"] = {{"dims", spec.dims}, {"mode", spec.mode_string()}};
        j["weights"] = {{"x", rational_to_string(w.x)}, {"a", json::array()}};
        for (const auto& a : w.a) j["weights"]["a"].push_back(rational_to_string(a));
        j["results"] = json::array();
        for (const auto& m : outcomes) {
            json r{{"method", m.method}};
            if (m.skipped)
                r["skipped"] = m.display;
            else
                r["value"] = m.display;
            j["results"].push_back(std::move(r));
        }
        j["rel_dev"] = dev;
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "mode,dims,x";
        for (std::size_t i = 0; i < w.a.size(); ++i) std::cout << ",a" << i + 1;
        std::cout << ",Z_det,Z_formula,Z_enum,rel_dev,agree\n";
        std::cout << spec.mode_string() << "," << dims_x_string(spec) << ","
                  << rational_to_string(w.x);
        for (const auto& a : w.a) std::cout << "," << rational_to_string(a);
        for (const char* name : {"det", "formula", "enumerate"}) {
            std::cout << ",";
            for (const auto& m : outcomes)
                if (m.method == name) std::cout << m.display;
        }
        std::cout << "," << dev << "," << (agree ? "true" : "false") << "\n";
    } else {
        std::cout << "spec: " << spec.mode_string() << "[" << dims_x_string(spec)
                  << "]  weights: x=" << rational_to_string(w.x) << " a=(";
        for (std::size_t i = 0; i < w.a.size(); ++i)
            std::cout << (i ? "," : "") << rational_to_string(w.a[i]);
        std::cout << ")\n";
        for (const auto& m : outcomes)
            std::cout << "Z_" << m.method << " = " << m.display << "\n";
        if (outcomes.size() > 1)
            std::cout << "agree: " << (agree ? "yes" : "NO") << " (rel_dev=" << dev << ")\n";
    }
    return agree ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& json_path) {
    SuiteResult res;
    if (suite == "small")
        res = suite_small();
    else if (suite == "formulas")
        res = suite_formulas();
    else if (suite == "counterexamples")
        res = suite_counterexamples();
    else if (suite == "relation")
        res = suite_relation();
    else
        throw SpecError("unknown suite '" + suite +
                        "' (expected small | formulas | counterexamples | relation)");

    for (const auto& c : res.cases)
        if (!c.pass) std::cout << "[FAIL] " << c.name << (c.detail.empty() ? "" : "  " + c.detail)
                               << "\n";
    std::cout << "suite " << res.suite << ": " << res.cases.size() - res.failed_count() << "/"
              << res.cases.size() << " checks passed\n";
    if (!json_path.empty()) {
        json j = json::array();
        for (const auto& c : res.cases)
            j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        std::ofstream out(json_path);
        out << j.dump(2) << "\n";
    }
    return res.all_pass() ? 0 : 1;
}

int cmd_sweep(const GridSpec& spec, const std::string& x_list, const std::string& a_lists,
              double tol, const std::string& out_path) {
    std::vector<Rational> xs;
    for (const auto& tok : split(x_list, ',')) xs.push_back(parse_rational(tok));
    std::vector<std::vector<Rational>> as(spec.dimension());
    if (a_lists.empty()) {
        for (auto& axis : as) axis.push_back(Rational(1));
    } else {
        auto parts = split(a_lists, ';');
        if (static_cast<int>(parts.size()) != spec.dimension())
            throw WeightError("expected " + std::to_string(spec.dimension()) +
                              " semicolon-separated axis weight lists");
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (const auto& tok : split(parts[i], ','))
                as[i].push_back(parse_rational(tok));
    }

    std::ostringstream os;
    os << "mode,dims,x";
    for (int i = 1; i <= spec.dimension(); ++i) os << ",a" << i;
    os << ",Z_det,Z_formula,Z_enum,rel_dev,agree\n";

    bool all_agree = true;
    std::vector<std::size_t> idx(as.size(), 0);
    for (const auto& x : xs) {
        idx.assign(as.size(), 0);
        for (;;) {
            WeightSpec w;
            w.x = x;
            for (std::size_t i = 0; i < as.size(); ++i) w.a.push_back(as[i][idx[i]]);
            auto outcomes = run_methods(spec, w, "all");
            double dev = outcome_deviation(outcomes);
            bool agree = dev <= tol;
            all_agree = all_agree && agree;
            os << spec.mode_string() << "," << dims_x_string(spec) << ","
               << rational_to_string(x);
            for (const auto& a : w.a) os << "," << rational_to_string(a);
            for (const char* name : {"det", "formula", "enumerate"}) {
                os << ",";
                for (const auto& m : outcomes)
                    if (m.method == name) os << m.display;
            }
            os << "," << dev << "," << (agree ? "true" : "false") << "\n";
            std::size_t i = 0;
            while (i < as.size() && ++idx[i] == as[i].size()) idx[i++] = 0;
            if (i == as.size()) break;
        }
        if (as.empty()) break;
    }
    if (out_path.empty())
        std::cout << os.str();
    else
        std::ofstream(out_path) << os.str();
    return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition functions of grid graphs under free, cylindrical,\n"
                 "toroidal, moebius and klein boundary conditions"};
    app.require_subcommand(1);

    std::string dims, mode = "free", x_text = "1", a_text, method = "all", format = "text";
    std::string suite, json_path, out_path, builder = "graph", x_list = "1", a_lists;
    double tol = 1e-8;
    bool real_mode = false;

    auto add_spec_opts = [&](CLI::App* cmd) {
        cmd->add_option("--dims", dims, "comma-separated side lengths, e.g. 4,2,2")->required();
        cmd->add_option("--mode", mode, "free | cylindrical:<l> | toroidal | moebius | klein");
    };

    auto* compute = app.add_subcommand("compute", "partition function by the requested methods");
    add_spec_opts(compute);
    compute->add_option("--x", x_text, "vertex weight (rational)");
    compute->add_option("--a", a_text, "comma-separated axis weights");
    compute->add_option("--method", method, "det | formula | enumerate | all");
    compute->add_option("--format", format, "text | json | csv");
    compute->add_option("--tol", tol, "agreement tolerance (relative)");
    compute->add_flag("--real", real_mode, "evaluate the determinant in real arithmetic");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "small | formulas | counterexamples | relation")
        ->required();
    verify->add_option("--json", json_path, "write a per-case JSON log to this file");

    auto* sweep = app.add_subcommand("sweep", "cross-product weight sweep, CSV output");
    add_spec_opts(sweep);
    sweep->add_option("--x", x_list, "comma-separated x values");
    sweep->add_option("--a", a_lists, "per-axis weight lists, ';' between axes, ',' within");
    sweep->add_option("--tol", tol, "agreement tolerance (relative)");
    sweep->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* exp = app.add_subcommand("export", "serialize the oriented grid");
    add_spec_opts(exp);
    exp->add_option("--format", format, "json | dot");
    exp->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* dump = app.add_subcommand("dump-matrix", "dense signed adjacency matrix rows");
    add_spec_opts(dump);
    dump->add_option("--x", x_text, "vertex weight (rational)");
    dump->add_option("--a", a_text, "comma-separated axis weights");
    dump->add_option("--builder", builder, "graph | kronecker");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            GridSpec spec = GridSpec::parse(dims, mode);
            WeightSpec w = parse_weights(spec, x_text, a_text, real_mode);
            return cmd_compute(spec, w, method, format, tol);
        }
        if (verify->parsed()) return cmd_verify(suite, json_path);
        if (sweep->parsed()) {
            GridSpec spec = GridSpec::parse(dims, mode);
            return cmd_sweep(spec, x_list, a_lists, tol, out_path);
        }
        if (exp->parsed()) {
            GridSpec spec = GridSpec::parse(dims, mode);
            std::string text = export_graph(build_grid(spec),
                                            parse_graph_format(format == "text" ? "json" : format));
            if (out_path.empty())
                std::cout << text;
            else
                std::ofstream(out_path) << text;
            return 0;
        }
        if (dump->parsed()) {
            GridSpec spec = GridSpec::parse(dims, mode);
            WeightSpec w = parse_weights(spec, x_text, a_text, false);
            SignedMatrix K = builder == "kronecker"
                                 ? build_K_kronecker(spec, w)
                                 : build_K_from_graph(build_grid(spec), w);
            std::cout << dump_rows(K.m);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
