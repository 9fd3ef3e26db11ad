#pragma once

#include <string>

#include "gridmono/grid.hpp"

namespace gridmono {

enum class GraphFormat { Json, Dot };

GraphFormat parse_graph_format(const std::string& text);

// Deterministic serialization: vertices sorted by label, edges sorted by
// (tail, head, axis, kind). JSON schema:
//   { "spec": {"dims": [...], "mode": "..."},
//     "vertices": [{"label": int, "coords": [int, ...]}, ...],
//     "edges": [{"tail": int, "head": int, "axis": int, "kind": "solid"|"dashed"}, ...] }
// DOT renders dashed edges with style=dashed.
std::string export_graph(const OrientedGrid& grid, GraphFormat format);

// Parses the JSON schema above, rebuilds the grid from its spec and checks
// that the serialized vertices and edges match the rebuilt grid exactly.
OrientedGrid import_graph(const std::string& json_text);

}  // namespace gridmono
