#include "gridmono/graph_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gridmono/errors.hpp"

namespace gridmono {

using nlohmann::json;

GraphFormat parse_graph_format(const std::string& text) {
    if (text == "json") return GraphFormat::Json;
    if (text == "dot") return GraphFormat::Dot;
    throw SpecError("unknown graph format '" + text + "' (expected json | dot)");
}

namespace {

std::vector<Edge> sorted_edges(const OrientedGrid& grid) {
    std::vector<Edge> edges = grid.edges;
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.tail, a.head, a.axis, a.kind) < std::tie(b.tail, b.head, b.axis, b.kind);
    });
    return edges;
}

json spec_to_json(const GridSpec& spec) {
    return json{{"dims", spec.dims}, {"mode", spec.mode_string()}};
}

}  // namespace

std::string export_graph(const OrientedGrid& grid, GraphFormat format) {
    const auto edges = sorted_edges(grid);
    if (format == GraphFormat::Json) {
        json j;
        j["spec"] = spec_to_json(grid.spec);
        j["vertices"] = json::array();
        for (const Vertex& v : grid.vertices)
            j["vertices"].push_back(json{{"label", v.label}, {"coords", v.coords}});
        j["edges"] = json::array();
        for (const Edge& e : edges)
            j["edges"].push_back(json{{"tail", e.tail},
                                      {"head", e.head},
                                      {"axis", e.axis},
                                      {"kind", e.kind == EdgeKind::Solid ? "solid" : "dashed"}});
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "digraph grid {\n";
    os << "  // " << grid.spec.mode_string() << " [";
    for (std::size_t i = 0; i < grid.spec.dims.size(); ++i)
        os << (i ? "," : "") << grid.spec.dims[i];
    os << "]\n";
    for (const Vertex& v : grid.vertices) {
        os << "  " << v.label << " [label=\"" << v.label << " (";
        for (std::size_t i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords[i];
        os << ")\"];\n";
    }
    for (const Edge& e : edges) {
        os << "  " << e.tail << " -> " << e.head;
        if (e.kind == EdgeKind::Dashed) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

OrientedGrid import_graph(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.contains("spec") || !j["spec"].contains("dims") || !j["spec"].contains("mode"))
        throw SpecError("graph JSON lacks a spec object");
    std::string dims_csv;
    for (const auto& d : j["spec"]["dims"]) {
        if (!dims_csv.empty()) dims_csv += ",";
        dims_csv += std::to_string(d.get<int>());
    }
    GridSpec spec = GridSpec::parse(dims_csv, j["spec"]["mode"].get<std::string>());
    OrientedGrid grid = build_grid(spec);

    // the file must agree with the rebuilt grid, field by field
    const auto& jv = j.at("vertices");
    if (jv.size() != grid.vertices.size())
        throw SpecError("graph JSON vertex count does not match its spec");
    for (const auto& item : jv) {
        int label = item.at("label").get<int>();
        auto coords = item.at("coords").get<std::vector<int>>();
        if (label < 1 || label > static_cast<int>(grid.vertices.size()) ||
            grid.vertices[label - 1].coords != coords)
            throw SpecError("graph JSON vertex list disagrees with its spec");
    }
    const auto rebuilt = sorted_edges(grid);
    const auto& je = j.at("edges");
    if (je.size() != rebuilt.size())
        throw SpecError("graph JSON edge count does not match its spec");
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
        const auto& item = je[i];
        const Edge& e = rebuilt[i];
        if (item.at("tail").get<int>() != e.tail || item.at("head").get<int>() != e.head ||
            item.at("axis").get<int>() != e.axis ||
            item.at("kind").get<std::string>() !=
                (e.kind == EdgeKind::Solid ? "solid" : "dashed"))
            throw SpecError("graph JSON edge list disagrees with its spec");
    }
    return grid;
}

}  // namespace gridmono
