#include "gridmono/oracle.hpp"

#include <algorithm>

#include "gridmono/errors.hpp"

namespace gridmono {

Rational MergedGraph::signed_weight(int u, int v) const {
    const auto& ns = nbr[u - 1];
    auto it = std::lower_bound(ns.begin(), ns.end(), v);
    if (it == ns.end() || *it != v) return 0;
    return weight[u - 1][static_cast<std::size_t>(it - ns.begin())];
}

MergedGraph merge_parallel_edges(const OrientedGrid& grid, const WeightSpec& w) {
    w.validate(grid.spec);
    const int n = static_cast<int>(grid.vertex_count());
    // accumulate signed weights per unordered pair, keyed at the lower label
    std::vector<std::vector<std::pair<int, Rational>>> acc(n);
    for (const Edge& e : grid.edges) {
        int u = std::min(e.tail, e.head), v = std::max(e.tail, e.head);
        Rational sw = e.tail == u ? w.a[e.axis - 1] : -w.a[e.axis - 1];
        auto& row = acc[u - 1];
        auto it = std::find_if(row.begin(), row.end(), [&](const auto& p) { return p.first == v; });
        if (it == row.end())
            row.emplace_back(v, std::move(sw));
        else
            it->second += sw;
    }
    MergedGraph g;
    g.n = n;
    g.nbr.resize(n);
    g.weight.resize(n);
    for (int u = 1; u <= n; ++u) {
        auto& row = acc[u - 1];
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [v, sw] : row) {
            if (sw == 0) continue;  // cancelled parallel pair: no merged edge
            g.nbr[u - 1].push_back(v);
            g.weight[u - 1].push_back(sw);
            g.nbr[v - 1].push_back(u);
            g.weight[v - 1].push_back(-sw);
        }
    }
    return g;
}

namespace {

struct MatchingEnum {
    const MergedGraph& g;
    std::vector<bool> used;
    Rational total = 0;

    explicit MatchingEnum(const MergedGraph& graph) : g(graph), used(graph.n + 1, false) {}

    void perfect(int from, const Rational& acc) {
        int v = from;
        while (v <= g.n && used[v]) ++v;
        if (v > g.n) {
            total += acc;
            return;
        }
        used[v] = true;
        const auto& ns = g.nbr[v - 1];
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const int u = ns[i];
            if (used[u]) continue;
            used[u] = true;
            perfect(v + 1, acc * abs(g.weight[v - 1][i]));
            used[u] = false;
        }
        used[v] = false;
    }

    void all(int v, const Rational& acc, const Rational& x) {
        if (v > g.n) {
            total += acc;
            return;
        }
        if (used[v]) {
            all(v + 1, acc, x);
            return;
        }
        used[v] = true;
        all(v + 1, acc * x, x);  // v stays a monomer
        const auto& ns = g.nbr[v - 1];
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const int u = ns[i];
            if (u < v || used[u]) continue;
            used[u] = true;
            all(v + 1, acc * abs(g.weight[v - 1][i]), x);
            used[u] = false;
        }
        used[v] = false;
    }
};

struct LoopVertexEnum {
    const MergedGraph& g;
    const Rational x;
    const std::function<void(const LoopVertexConfig&)>* callback;
    std::vector<bool> used;
    std::vector<int> path;
    Rational total = 0;
    LoopVertexConfig cfg;

    LoopVertexEnum(const MergedGraph& graph, Rational xv,
                   const std::function<void(const LoopVertexConfig&)>* cb)
        : g(graph), x(std::move(xv)), callback(cb), used(graph.n + 1, false) {}

    void run() { assign(1, Rational(1)); }

    // Assigns the lowest unassigned vertex to one of: isolated vertex,
    // doubled edge, or the minimum of a new even directed loop.
    void assign(int from, const Rational& acc) {
        int v = from;
        while (v <= g.n && used[v]) ++v;
        if (v > g.n) {
            total += acc;
            if (callback) {
                cfg.weight = acc;
                (*callback)(cfg);
            }
            return;
        }
        used[v] = true;
        if (x != 0 || callback) {
            if (callback) cfg.isolated.push_back(v);
            assign(v + 1, acc * x);
            if (callback) cfg.isolated.pop_back();
        }
        const auto& ns = g.nbr[v - 1];
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const int u = ns[i];
            if (used[u]) continue;
            used[u] = true;
            if (callback) cfg.doubled.emplace_back(v, u);
            const Rational& sw = g.weight[v - 1][i];
            assign(v + 1, acc * sw * sw);  // doubled edge: +a^2
            if (callback) cfg.doubled.pop_back();
            used[u] = false;
        }
        // loops with minimum vertex v; each directed loop appears once,
        // the two directions coming from the choice of the first step
        std::vector<int> outer_path = std::move(path);
        path.assign(1, v);
        walk(v, acc, Rational(1));
        path = std::move(outer_path);
        used[v] = false;
    }

    // Extends the growing path by neighbours > v; closes at even length >= 4.
    void walk(int v, const Rational& acc, const Rational& sign_product) {
        const int last = path.back();
        const auto& ns = g.nbr[last - 1];
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const int u = ns[i];
            const Rational& sw = g.weight[last - 1][i];
            if (u == v && path.size() >= 4 && path.size() % 2 == 0) {
                Rational loop_weight = -(sign_product * sw);
                if (callback) cfg.loops.push_back(path);
                assign(v + 1, acc * loop_weight);  // assign() preserves path
                if (callback) cfg.loops.pop_back();
            } else if (u > v && !used[u]) {
                used[u] = true;
                path.push_back(u);
                walk(v, acc, sign_product * sw);
                path.pop_back();
                used[u] = false;
            }
        }
    }
};

void require_cap(const OrientedGrid& grid) {
    if (grid.vertex_count() > kLoopVertexCap)
        throw CapExceededError("loop-vertex enumeration capped at " +
                               std::to_string(kLoopVertexCap) + " vertices, got " +
                               std::to_string(grid.vertex_count()));
}

}  // namespace

PartitionValue enumerate_perfect_matchings(const OrientedGrid& grid, const WeightSpec& w) {
    MergedGraph g = merge_parallel_edges(grid, w);
    Rational total = 0;
    if (g.n % 2 == 0) {
        MatchingEnum e(g);
        e.perfect(1, 1);
        total = e.total;
    }
    return PartitionValue::of_exact(Method::Enumeration, total, grid.spec, w);
}

PartitionValue enumerate_matchings(const OrientedGrid& grid, const WeightSpec& w) {
    MergedGraph g = merge_parallel_edges(grid, w);
    MatchingEnum e(g);
    e.all(1, 1, w.x);
    return PartitionValue::of_exact(Method::Enumeration, e.total, grid.spec, w);
}

void for_each_loop_vertex_config(const OrientedGrid& grid, const WeightSpec& w,
                                 const std::function<void(const LoopVertexConfig&)>& fn) {
    require_cap(grid);
    MergedGraph g = merge_parallel_edges(grid, w);
    LoopVertexEnum e(g, w.x, &fn);
    e.run();
}

PartitionValue enumerate_loop_vertex(const OrientedGrid& grid, const WeightSpec& w) {
    require_cap(grid);
    MergedGraph g = merge_parallel_edges(grid, w);
    LoopVertexEnum e(g, w.x, nullptr);
    e.run();
    return PartitionValue::of_exact(Method::Enumeration, e.total, grid.spec, w);
}

void dump_loop_vertex_configs(const OrientedGrid& grid, const WeightSpec& w, std::ostream& os) {
    for_each_loop_vertex_config(grid, w, [&](const LoopVertexConfig& c) {
        os << "isolated:";
        for (int v : c.isolated) os << ' ' << v;
        os << "; doubled:";
        for (auto [u, v] : c.doubled) os << ' ' << u << '-' << v;
        os << "; loops:";
        for (const auto& loop : c.loops) {
            os << " (";
            for (std::size_t i = 0; i < loop.size(); ++i) os << (i ? " " : "") << loop[i];
            os << ')';
        }
        os << "; weight: " << rational_to_string(c.weight) << '\n';
    });
}

namespace {

void check_loop(const OrientedGrid& grid, const std::vector<int>& loop) {
    if (loop.size() < 4 || loop.size() % 2 != 0)
        throw SpecError("loop must have even length >= 4");
    std::vector<int> sorted = loop;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw SpecError("loop must be a simple cycle");
    for (int v : loop)
        if (v < 1 || v > grid.vertex_count()) throw SpecError("loop vertex out of range");
}

}  // namespace

Rational plane_loop_weight(const OrientedGrid& grid, const std::vector<int>& loop_labels,
                           const WeightSpec& w) {
    if (grid.spec.mode != Mode::Free || grid.spec.dimension() != 2)
        throw SpecError("plane loop weights are defined for 2D free grids only");
    w.validate(grid.spec);
    check_loop(grid, loop_labels);
    const std::size_t len = loop_labels.size();

    Rational weight = 1;
    for (std::size_t i = 0; i < len; ++i) {
        const auto& cu = grid.coords_of(loop_labels[i]);
        const auto& cv = grid.coords_of(loop_labels[(i + 1) % len]);
        int axis = 0;
        if (cu[1] == cv[1] && std::abs(cu[0] - cv[0]) == 1) axis = 1;
        if (cu[0] == cv[0] && std::abs(cu[1] - cv[1]) == 1) axis = 2;
        if (axis == 0) throw SpecError("consecutive loop vertices are not grid-adjacent");
        weight *= w.a[axis - 1];
    }

    // exact integer ray crossing: a vertex is strictly inside iff a +x ray
    // from it crosses an odd number of vertical polygon segments
    std::vector<bool> on_loop(grid.vertex_count() + 1, false);
    for (int v : loop_labels) on_loop[v] = true;
    long inside = 0;
    for (const Vertex& vert : grid.vertices) {
        if (on_loop[vert.label]) continue;
        const int px = vert.coords[0], py = vert.coords[1];
        int crossings = 0;
        for (std::size_t i = 0; i < len; ++i) {
            const auto& cu = grid.coords_of(loop_labels[i]);
            const auto& cv = grid.coords_of(loop_labels[(i + 1) % len]);
            if ((cu[1] > py) == (cv[1] > py)) continue;  // half-open rule in y
            if (cu[0] > px) ++crossings;                 // vertical segment at x = cu[0]
        }
        if (crossings % 2 == 1) ++inside;
    }
    return inside % 2 == 0 ? weight : -weight;
}

Rational oriented_loop_weight(const OrientedGrid& grid, const std::vector<int>& loop_labels,
                              const WeightSpec& w) {
    check_loop(grid, loop_labels);
    MergedGraph g = merge_parallel_edges(grid, w);
    Rational prod = 1;
    const std::size_t len = loop_labels.size();
    for (std::size_t i = 0; i < len; ++i) {
        Rational sw = g.signed_weight(loop_labels[i], loop_labels[(i + 1) % len]);
        if (sw == 0) throw SpecError("consecutive loop vertices are not adjacent");
        prod *= sw;
    }
    return -prod;
}

}  // namespace gridmono
