#include "gridmono/grid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace gridmono {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Free: return "free";
        case Mode::Cylindrical: return "cylindrical";
        case Mode::Toroidal: return "toroidal";
        case Mode::Moebius: return "moebius";
        case Mode::Klein: return "klein";
    }
    return "?";
}

std::int64_t GridSpec::vertex_count() const {
    std::int64_t n = 1;
    for (int d : dims) n *= d;
    return n;
}

bool GridSpec::is_cyclic_axis(int axis) const {
    switch (mode) {
        case Mode::Free:
        case Mode::Moebius: return false;
        case Mode::Cylindrical: return axis <= ell;
        case Mode::Toroidal: return true;
        case Mode::Klein: return axis >= 2;
    }
    return false;
}

bool GridSpec::all_dims_even() const {
    return std::all_of(dims.begin(), dims.end(), [](int n) { return n % 2 == 0; });
}

void GridSpec::validate() const {
    if (dims.empty()) throw SpecError("dims must be a non-empty list");
    for (int n : dims)
        if (n < 1) throw SpecError("axis lengths must be positive");
    const int d = dimension();
    if (mode == Mode::Cylindrical && (ell < 1 || ell > d))
        throw SpecError("cylindrical mode needs 1 <= ell <= d, got ell=" + std::to_string(ell));
    if ((mode == Mode::Moebius || mode == Mode::Klein) && d < 2)
        throw SpecError(to_string(mode) + " mode needs d >= 2 (the first axis carries the twist)");
    if (mode != Mode::Free && dims[0] < 2)
        throw SpecError(to_string(mode) + " mode needs n_1 >= 2");
    for (int axis = 1; axis <= d; ++axis)
        if (is_cyclic_axis(axis) && dims[axis - 1] < 2)
            throw SpecError("cyclic axis " + std::to_string(axis) + " needs n >= 2");
}

std::string GridSpec::mode_string() const {
    if (mode == Mode::Cylindrical) return "cylindrical:" + std::to_string(ell);
    return to_string(mode);
}

GridSpec GridSpec::parse(const std::string& dims_csv, const std::string& mode_text) {
    GridSpec s;
    std::stringstream ss(dims_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            s.dims.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw SpecError("bad axis length: '" + tok + "'");
        }
    }
    if (mode_text == "free") {
        s.mode = Mode::Free;
    } else if (mode_text == "toroidal") {
        s.mode = Mode::Toroidal;
    } else if (mode_text == "moebius") {
        s.mode = Mode::Moebius;
    } else if (mode_text == "klein") {
        s.mode = Mode::Klein;
    } else if (mode_text.rfind("cylindrical:", 0) == 0) {
        s.mode = Mode::Cylindrical;
        try {
            s.ell = std::stoi(mode_text.substr(12));
        } catch (const std::exception&) {
            throw SpecError("bad cylindrical axis count in '" + mode_text + "'");
        }
    } else {
        throw SpecError("unknown mode '" + mode_text +
                        "' (expected free | cylindrical:<l> | toroidal | moebius | klein)");
    }
    s.validate();
    return s;
}

int boustrophedon_label(const std::vector<int>& dims, const std::vector<int>& coords) {
    if (dims.empty()) throw SpecError("dims must be a non-empty list");
    if (coords.size() != dims.size()) throw SpecError("coords/dims dimension mismatch");
    long label = coords[0];
    long n_low = dims[0];
    for (std::size_t j = 1; j < dims.size(); ++j) {
        const int k = coords[j];
        if (k % 2 == 1)
            label = static_cast<long>(k - 1) * n_low + label;
        else
            label = static_cast<long>(k - 1) * n_low + (n_low + 1 - label);
        n_low *= dims[j];
    }
    return static_cast<int>(label);
}

namespace {

// Iterates coordinate tuples in row-major order with axis 1 fastest.
struct CoordIter {
    const std::vector<int>& dims;
    std::vector<int> c;
    bool done = false;
    explicit CoordIter(const std::vector<int>& d) : dims(d), c(d.size(), 1) {}
    void next() {
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (++c[i] <= dims[i]) return;
            c[i] = 1;
        }
        done = true;
    }
};

}  // namespace

std::vector<int> boustrophedon_labels(const std::vector<int>& dims) {
    if (dims.empty()) throw SpecError("dims must be a non-empty list");
    std::int64_t n = 1;
    for (int d : dims) n *= d;
    std::vector<int> table;
    table.reserve(n);
    for (CoordIter it(dims); !it.done; it.next())
        table.push_back(boustrophedon_label(dims, it.c));
    return table;
}

int OrientedGrid::label_of(const std::vector<int>& coords) const {
    return boustrophedon_label(spec.dims, coords);
}

std::size_t OrientedGrid::solid_edge_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(),
                      [](const Edge& e) { return e.kind == EdgeKind::Solid; }));
}

std::size_t OrientedGrid::dashed_edge_count() const {
    return edges.size() - solid_edge_count();
}

namespace {

// Reflected coordinate tuple for the twist: (k_2..k_d) -> (n_i - k_i + 1).
std::vector<int> twist_partner(const GridSpec& spec, const std::vector<int>& rest) {
    std::vector<int> c(spec.dimension());
    c[0] = spec.dims[0];
    for (int i = 1; i < spec.dimension(); ++i) c[i] = spec.dims[i] - rest[i - 1] + 1;
    return c;
}

struct Builder {
    const GridSpec& spec;
    OrientedGrid g;
    // solid edge id by (lo,hi,axis); first occurrence wins (duplicates from
    // length-2 cyclic wraps share endpoints and orientation)
    std::map<std::array<int, 3>, int> solid_by_key;
    // dashed edge id by flattened (k_2..k_d) index
    std::map<std::vector<int>, int> dashed_by_index;

    explicit Builder(const GridSpec& s) : spec(s) { g.spec = s; }

    int add_solid(int u, int v, int axis) {
        Edge e{std::min(u, v), std::max(u, v), axis, EdgeKind::Solid};
        g.edges.push_back(e);
        int id = static_cast<int>(g.edges.size()) - 1;
        solid_by_key.emplace(std::array<int, 3>{e.tail, e.head, axis}, id);
        return id;
    }

    int solid_id(int u, int v, int axis) const {
        auto it = solid_by_key.find({std::min(u, v), std::max(u, v), axis});
        if (it == solid_by_key.end())
            throw InternalError("missing solid edge for square construction");
        return it->second;
    }

    void build_vertices() {
        g.vertices.resize(spec.vertex_count());
        for (CoordIter it(spec.dims); !it.done; it.next()) {
            int label = boustrophedon_label(spec.dims, it.c);
            g.vertices[label - 1] = Vertex{it.c, label};
        }
    }

    void build_solid_edges() {
        const int d = spec.dimension();
        for (CoordIter it(spec.dims); !it.done; it.next()) {
            for (int ax = 1; ax <= d; ++ax) {
                const int n = spec.dims[ax - 1];
                if (it.c[ax - 1] < n) {
                    std::vector<int> c2 = it.c;
                    ++c2[ax - 1];
                    add_solid(boustrophedon_label(spec.dims, it.c),
                              boustrophedon_label(spec.dims, c2), ax);
                }
                // wrap edge n -> 1 on cyclic axes; for n = 2 this doubles the
                // step edge (merged later at matrix-build time)
                if (spec.is_cyclic_axis(ax) && it.c[ax - 1] == n) {
                    std::vector<int> c2 = it.c;
                    c2[ax - 1] = 1;
                    add_solid(boustrophedon_label(spec.dims, it.c),
                              boustrophedon_label(spec.dims, c2), ax);
                }
            }
        }
    }

    void build_dashed_edges() {
        if (!spec.has_dashed_edges()) return;
        const int d = spec.dimension();
        std::vector<int> rest_dims(spec.dims.begin() + 1, spec.dims.end());
        for (CoordIter it(rest_dims); !it.done; it.next()) {
            std::vector<int> cu(d);
            cu[0] = 1;
            for (int i = 1; i < d; ++i) cu[i] = it.c[i - 1];
            std::vector<int> cv = twist_partner(spec, it.c);
            int u = boustrophedon_label(spec.dims, cu);
            int v = boustrophedon_label(spec.dims, cv);
            g.edges.push_back(Edge{u, v, 1, EdgeKind::Dashed});
            dashed_by_index.emplace(it.c, static_cast<int>(g.edges.size()) - 1);
        }
    }

    // Axis-aligned unit 4-cycles, including wrap steps on cyclic axes with
    // n >= 3 (for n = 2 the wrap square duplicates the step square).
    void build_solid_squares() {
        const int d = spec.dimension();
        auto step_targets = [&](const std::vector<int>& c, int ax) {
            std::vector<std::vector<int>> out;
            const int n = spec.dims[ax - 1];
            if (c[ax - 1] < n) {
                auto c2 = c;
                ++c2[ax - 1];
                out.push_back(std::move(c2));
            }
            if (spec.is_cyclic_axis(ax) && n >= 3 && c[ax - 1] == n) {
                auto c2 = c;
                c2[ax - 1] = 1;
                out.push_back(std::move(c2));
            }
            return out;
        };
        for (CoordIter it(spec.dims); !it.done; it.next()) {
            for (int ax1 = 1; ax1 <= d; ++ax1) {
                for (int ax2 = ax1 + 1; ax2 <= d; ++ax2) {
                    for (const auto& b : step_targets(it.c, ax1)) {
                        for (const auto& dd : step_targets(it.c, ax2)) {
                            std::vector<int> cc = b;
                            cc[ax2 - 1] = dd[ax2 - 1];
                            int la = boustrophedon_label(spec.dims, it.c);
                            int lb = boustrophedon_label(spec.dims, b);
                            int lc = boustrophedon_label(spec.dims, cc);
                            int ld = boustrophedon_label(spec.dims, dd);
                            Square sq;
                            sq.path = {la, lb, lc, ld};
                            sq.edge_ids = {solid_id(la, lb, ax1), solid_id(lb, lc, ax2),
                                           solid_id(lc, ld, ax1), solid_id(ld, la, ax2)};
                            g.squares.push_back(sq);
                        }
                    }
                }
            }
        }
    }

    // Pairs of dashed edges adjacent in one coordinate of (k_2..k_d),
    // joined by the two solid axis-j edges at x_1 = 1 and x_1 = n_1.
    // Klein cyclic axes with n >= 3 also pair across the wrap.
    void build_dashed_squares() {
        if (!spec.has_dashed_edges()) return;
        const int d = spec.dimension();
        for (const auto& [idx, id1] : dashed_by_index) {
            for (int j = 0; j < d - 1; ++j) {
                const int axis = j + 2;
                const int n = spec.dims[axis - 1];
                std::vector<std::vector<int>> partners;
                if (idx[j] < n) {
                    auto k2 = idx;
                    ++k2[j];
                    partners.push_back(std::move(k2));
                }
                if (spec.is_cyclic_axis(axis) && n >= 3 && idx[j] == n) {
                    auto k2 = idx;
                    k2[j] = 1;
                    partners.push_back(std::move(k2));
                }
                for (const auto& k2 : partners) {
                    int id2 = dashed_by_index.at(k2);
                    const Edge& d1 = g.edges[id1];
                    const Edge& d2 = g.edges[id2];
                    // endpoints by side: u at x_1 = 1, v at x_1 = n_1
                    auto side = [&](const Edge& e) {
                        return g.vertices[e.tail - 1].coords[0] == 1
                                   ? std::pair{e.tail, e.head}
                                   : std::pair{e.head, e.tail};
                    };
                    auto [u1, v1] = side(d1);
                    auto [u2, v2] = side(d2);
                    Square sq;
                    sq.has_dashed = true;
                    sq.path = {u1, v1, v2, u2};
                    sq.edge_ids = {id1, solid_id(v1, v2, axis), id2, solid_id(u2, u1, axis)};
                    g.squares.push_back(sq);
                }
            }
        }
    }
};

}  // namespace

OrientedGrid build_grid(const GridSpec& spec) {
    spec.validate();
    Builder b(spec);
    b.build_vertices();
    b.build_solid_edges();
    b.build_dashed_edges();
    b.build_solid_squares();
    b.build_dashed_squares();
    OrientedGrid g = std::move(b.g);
    if (spec.has_dashed_edges()) orient_dashed_edges(g);
    return g;
}

namespace {

// Number of square edges co-oriented with the stored traversal, mod 2.
int square_parity(const OrientedGrid& g, const Square& sq) {
    int co = 0;
    for (int i = 0; i < 4; ++i) {
        const Edge& e = g.edges[sq.edge_ids[i]];
        if (e.tail == sq.path[i]) ++co;
    }
    return co % 2;
}

}  // namespace

void orient_dashed_edges(OrientedGrid& grid, bool seed_outward) {
    const GridSpec& spec = grid.spec;
    if (!spec.has_dashed_edges())
        throw SpecError("orient_dashed_edges requires moebius or klein mode");
    const int d = spec.dimension();
    std::vector<int> rest_dims(spec.dims.begin() + 1, spec.dims.end());

    // gather dashed edges keyed by (k_2..k_d), endpoints as (u at x1=1, v)
    std::map<std::vector<int>, int> by_index;
    for (std::size_t i = 0; i < grid.edges.size(); ++i) {
        Edge& e = grid.edges[i];
        if (e.kind != EdgeKind::Dashed) continue;
        const auto& ct = grid.vertices[e.tail - 1].coords;
        const auto& ch = grid.vertices[e.head - 1].coords;
        const auto& cu = ct[0] == 1 ? ct : ch;
        std::vector<int> idx(cu.begin() + 1, cu.end());
        by_index.emplace(std::move(idx), static_cast<int>(i));
    }

    // direction flag per dashed edge: +1 = oriented u -> v (outward from x1=1)
    std::map<std::vector<int>, int> eps;
    auto endpoints = [&](int id) {
        const Edge& e = grid.edges[id];
        const auto& ct = grid.vertices[e.tail - 1].coords;
        return ct[0] == 1 ? std::pair{e.tail, e.head} : std::pair{e.head, e.tail};
    };

    const std::vector<int> seed(static_cast<std::size_t>(d - 1), 1);
    eps[seed] = seed_outward ? +1 : -1;
    std::deque<std::vector<int>> queue{seed};
    while (!queue.empty()) {
        std::vector<int> k = queue.front();
        queue.pop_front();
        auto [uk, vk] = endpoints(by_index.at(k));
        const int ek = eps.at(k);
        for (int j = 0; j < d - 1; ++j) {
            const int axis = j + 2;
            const int n = rest_dims[j];
            for (int delta : {+1, -1}) {
                std::vector<int> k2 = k;
                k2[j] += delta;
                bool wrapped = false;
                if (k2[j] < 1 || k2[j] > n) {
                    if (!(spec.is_cyclic_axis(axis) && n >= 3)) continue;
                    k2[j] = k2[j] < 1 ? n : 1;
                    wrapped = true;
                }
                auto it = by_index.find(k2);
                if (it == by_index.end()) continue;
                auto [uk2, vk2] = endpoints(it->second);
                // odd co-orientation around u_k -> v_k -> v_k' -> u_k' -> u_k
                int c2 = vk < vk2 ? 1 : 0;
                int c4 = uk2 < uk ? 1 : 0;
                int e2 = ((ek == +1 ? 1 : 0) + c2 + c4) % 2 == 1 ? +1 : -1;
                auto found = eps.find(k2);
                if (found != eps.end()) {
                    if (found->second != e2)
                        throw InternalError("contradictory dashed-edge constraints at index lattice" +
                                            std::string(wrapped ? " wrap" : ""));
                } else {
                    eps.emplace(k2, e2);
                    queue.push_back(k2);
                }
            }
        }
    }
    if (eps.size() != by_index.size())
        throw InternalError("dashed-edge index lattice is disconnected");

    for (const auto& [k, id] : by_index) {
        auto [u, v] = endpoints(id);
        Edge& e = grid.edges[id];
        if (eps.at(k) == +1) {
            e.tail = u;
            e.head = v;
        } else {
            e.tail = v;
            e.head = u;
        }
    }

    // the propagated assignment must leave every dashed square odd
    for (const Square& sq : grid.squares)
        if (sq.has_dashed && square_parity(grid, sq) != 1)
            throw InternalError("dashed square violates odd orientation after propagation");
}

bool verify_odd_orientation(const OrientedGrid& grid) {
    for (const Square& sq : grid.squares)
        if (square_parity(grid, sq) != 1) return false;
    return true;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>>
oriented_cartesian_orientation(const std::vector<OrientedFactor>& factors) {
    if (factors.empty()) throw SpecError("oriented Cartesian product needs at least one factor");
    const int d = static_cast<int>(factors.size());
    std::vector<int> dims(factors.size());
    for (int i = 0; i < d; ++i) {
        dims[i] = factors[i].length;
        if (dims[i] < 1) throw SpecError("factor length must be positive");
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (CoordIter it(dims); !it.done; it.next()) {
        for (int ax = 1; ax <= d; ++ax) {
            const int n = dims[ax - 1];
            // factor edges with their own orientation: steps k -> k+1,
            // plus the canonical wrap 1 -> n on cycles
            std::vector<std::pair<std::vector<int>, std::vector<int>>> factor_edges;
            if (it.c[ax - 1] < n) {
                auto c2 = it.c;
                ++c2[ax - 1];
                factor_edges.emplace_back(it.c, c2);
            }
            if (factors[ax - 1].cyclic && n >= 3 && it.c[ax - 1] == n) {
                auto c1 = it.c;
                c1[ax - 1] = 1;
                factor_edges.emplace_back(c1, it.c);  // oriented 1 -> n
            }
            for (auto& [t, h] : factor_edges) {
                // direction kept iff u_{i+1}+...+u_d+(d-i) is even
                long s = d - ax;
                for (int q = ax; q < d; ++q) s += t[q];
                if (s % 2 == 0)
                    out.emplace_back(t, h);
                else
                    out.emplace_back(h, t);
            }
        }
    }
    return out;
}

}  // namespace gridmono
