#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "covering.hpp"
#include "gog.hpp"
#include "group.hpp"
#include "lfunction.hpp"
#include "poly.hpp"

namespace ihara::io {

using nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with line and column.
json parse_text(std::string_view text, std::string_view what);

// {"vertices": [...], "edges": [[u, v], ...], "legs": [...]}
GraphDescription parse_graph(const json& j);
json to_json(const GraphDescription& d);

// Graph fields plus {"charges": {"u": 3, ...}}; missing charges default to 1.
// A "stabilizers" member, written for quotient gogs, is informational.
GraphOfGroups parse_gog(const json& j);
json to_json(const GraphOfGroups& x);

// {"generators": [{"vertices": "(2 3 4)", "half_edges": [...]}]}; either
// member may be omitted when the other determines the automorphism.
std::vector<GraphAutomorphism> parse_generators(const Graph& g, const json& j);
json generators_to_json(const FiniteGroupAction& a);
std::shared_ptr<const FiniteGroupAction> parse_action(const Graph& g, const json& j);

// Cover description, explicit generators, seeds and every choice table. On
// load the tables are re-validated against the action.
json to_json(const CoveringData& c);
CoveringData parse_covering(const json& j);

// {"name": ..., "dim": d, "generators": {"(234)": [[...]]}}. Entries are
// numbers, {"re": x, "im": y}, or strings such as "zeta3", "-zeta3^2", "-1".
Representation parse_representation(const std::shared_ptr<const FiniteGroupAction>& group, const json& j);
Complex parse_entry(const json& e);

/// Coefficient list; entries fitting in 64 bits are numbers, others strings.
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);
json complex_poly_to_json(const ComplexPoly& p);

std::string read_file(const std::string& path);

}  // namespace ihara::io
