#include "io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace ihara::io {

namespace {

const json& member(const json& j, const char* key, std::string_view what) {
    if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string(what) + " is missing \"" + key + "\"");
    return *it;
}

std::string label_of(const json& v, std::string_view what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(std::string(what) + ": vertex labels must be strings or integers");
}

std::vector<int> int_list(const json& j, std::string_view what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + " must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

int element_by_name(const FiniteGroupAction& a, const json& v, std::string_view what) {
    if (!v.is_string()) throw ParseError(std::string(what) + " must name group elements");
    auto id = a.find_by_name(v.get<std::string>());
    if (!id) throw ParseError(std::string(what) + ": no group element named '" + v.get<std::string>() + "'");
    return *id;
}

}  // namespace

json parse_text(std::string_view text, std::string_view what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line and column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::string(what) + ": JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }
}

GraphDescription parse_graph(const json& j) {
    GraphDescription d;
    for (const auto& v : member(j, "vertices", "graph")) d.vertices.push_back(label_of(v, "graph"));
    if (auto it = j.find("edges"); it != j.end()) {
        if (!it->is_array()) throw ParseError("graph \"edges\" must be an array");
        for (const auto& e : *it) {
            if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair of vertex labels");
            d.edges.emplace_back(label_of(e[0], "edge"), label_of(e[1], "edge"));
        }
    }
    if (auto it = j.find("legs"); it != j.end()) {
        if (!it->is_array()) throw ParseError("graph \"legs\" must be an array");
        for (const auto& l : *it) d.legs.push_back(label_of(l, "leg"));
    }
    return d;
}

json to_json(const GraphDescription& d) {
    json edges = json::array();
    for (const auto& [a, b] : d.edges) edges.push_back({a, b});
    return json{{"vertices", d.vertices}, {"edges", edges}, {"legs", d.legs}};
}

GraphOfGroups parse_gog(const json& j) {
    Graph g = Graph::from_description(parse_graph(j));
    std::vector<long> charges(g.vertex_count(), 1);
    if (auto it = j.find("charges"); it != j.end()) {
        if (!it->is_object()) throw ParseError("\"charges\" must map vertex labels to integers");
        for (const auto& [label, value] : it->items()) {
            auto v = g.find_vertex(label);
            if (!v) throw ParseError("charge given for unknown vertex '" + label + "'");
            if (!value.is_number_integer()) throw ParseError("charge of '" + label + "' must be an integer");
            charges[static_cast<std::size_t>(*v)] = value.get<long>();
        }
    }
    return GraphOfGroups(std::move(g), std::move(charges));
}

json to_json(const GraphOfGroups& x) {
    json j = to_json(x.graph().description());
    json charges = json::object();
    for (int v = 0; v < static_cast<int>(x.graph().vertex_count()); ++v)
        charges[x.graph().vertex_label(v)] = x.charge(v);
    j["charges"] = charges;
    if (x.has_stabilizers()) {
        json stab = json::object();
        for (int v = 0; v < static_cast<int>(x.graph().vertex_count()); ++v) {
            json names = json::array();
            for (int g : x.stabilizer(v)) names.push_back(x.ambient()->name(g));
            stab[x.graph().vertex_label(v)] = names;
        }
        j["stabilizers"] = stab;
    }
    return j;
}

std::vector<GraphAutomorphism> parse_generators(const Graph& g, const json& j) {
    const json& gens = member(j, "generators", "action");
    if (!gens.is_array()) throw ParseError("\"generators\" must be an array");
    std::vector<GraphAutomorphism> out;
    for (const auto& gen : gens) {
        GraphAutomorphism a;
        json vertices, half_edges;
        if (gen.is_string()) {
            vertices = gen;
        } else if (gen.is_object()) {
            if (auto it = gen.find("vertices"); it != gen.end()) vertices = *it;
            if (auto it = gen.find("half_edges"); it != gen.end()) half_edges = *it;
        } else {
            throw ParseError("each generator must be a cycle string or an object");
        }
        if (!half_edges.is_null()) a.half_edge_perm = int_list(half_edges, "\"half_edges\"");
        if (!vertices.is_null()) {
            if (!vertices.is_string()) throw ParseError("\"vertices\" must be cycle notation");
            a.vertex_perm = parse_vertex_cycles(g, vertices.get<std::string>());
            if (half_edges.is_null()) a.half_edge_perm = infer_half_edge_perm(g, a.vertex_perm);
        } else if (!half_edges.is_null()) {
            a.vertex_perm = vertex_perm_from_half_edges(g, a.half_edge_perm);
        } else {
            throw ParseError("generator needs \"vertices\" or \"half_edges\"");
        }
        check_automorphism(g, a);
        out.push_back(std::move(a));
    }
    return out;
}

json generators_to_json(const FiniteGroupAction& a) {
    json gens = json::array();
    for (int id : a.generators()) {
        const auto& e = a.element(id);
        gens.push_back({{"vertices", vertex_cycle_string(a.graph(), e.vertex_perm) == "1"
                                         ? std::string()
                                         : vertex_cycle_string(a.graph(), e.vertex_perm)},
                        {"half_edges", e.half_edge_perm}});
    }
    return json{{"generators", gens}};
}

std::shared_ptr<const FiniteGroupAction> parse_action(const Graph& g, const json& j) {
    std::size_t max_order = 100000;
    if (auto it = j.find("max_order"); it != j.end()) max_order = it->get<std::size_t>();
    return std::make_shared<const FiniteGroupAction>(g, parse_generators(g, j), max_order);
}

json to_json(const CoveringData& c) {
    const FiniteGroupAction& a = *c.action;
    json frob = json::array();
    for (int g : c.frobenius) frob.push_back(a.name(g));
    json tree = json::array();
    for (std::size_t h = 0; h < c.tree_half_edges.size(); ++h)
        if (c.tree_half_edges[h]) tree.push_back(h);
    return json{{"cover", to_json(c.cover().description())},
                {"action", generators_to_json(a)},
                {"tree_seed", c.base().vertex_label(c.options.tree_seed)},
                {"choice_seed", c.options.choice_seed},
                {"quotient", to_json(c.quotient)},
                {"tables",
                 {{"vertex_lift", c.vertex_lift},
                  {"identity_lift", c.identity_lift},
                  {"frobenius", frob},
                  {"tree", tree}}}};
}

CoveringData parse_covering(const json& j) {
    Graph y = Graph::from_description(parse_graph(member(j, "cover", "covering")));
    auto action = parse_action(y, member(j, "action", "covering"));
    CoveringOptions opt;
    if (auto it = j.find("choice_seed"); it != j.end()) opt.choice_seed = it->get<std::uint64_t>();
    const QuotientGraph q = quotient_graph(*action);
    if (auto it = j.find("tree_seed"); it != j.end()) {
        auto v = q.graph.find_vertex(label_of(*it, "tree_seed"));
        if (!v) throw ParseError("tree seed is not a vertex of the quotient");
        opt.tree_seed = *v;
    }
    auto tables = j.find("tables");
    if (tables == j.end()) return build_covering(std::move(action), opt);

    std::vector<int> frob;
    for (const auto& name : member(*tables, "frobenius", "covering tables"))
        frob.push_back(element_by_name(*action, name, "\"frobenius\""));
    std::vector<bool> tree(q.graph.half_edge_count(), false);
    for (int h : int_list(member(*tables, "tree", "covering tables"), "\"tree\"")) {
        if (h < 0 || static_cast<std::size_t>(h) >= tree.size()) throw ParseError("tree half-edge out of range");
        tree[static_cast<std::size_t>(h)] = true;
    }
    CoveringData c = covering_from_tables(std::move(action), opt,
                                          int_list(member(*tables, "vertex_lift", "covering tables"), "\"vertex_lift\""),
                                          int_list(member(*tables, "identity_lift", "covering tables"), "\"identity_lift\""),
                                          std::move(frob), std::move(tree));
    if (auto it = j.find("quotient"); it != j.end()) {
        if (!(parse_gog(*it).charges() == c.quotient.charges()) ||
            !(Graph::from_description(parse_graph(*it)) == c.base()))
            throw VerificationError("stored quotient does not match the recomputed one");
    }
    return c;
}

Complex parse_entry(const json& e) {
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_object()) {
        const double re = e.contains("re") ? e["re"].get<double>() : 0.0;
        const double im = e.contains("im") ? e["im"].get<double>() : 0.0;
        return {re, im};
    }
    if (!e.is_string()) throw ParseError("matrix entry must be a number, {re, im}, or a string");
    std::string s = e.get<std::string>();
    std::string body = s;
    double sign = 1.0;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        if (body[0] == '-') sign = -1.0;
        body.erase(0, 1);
    }
    if (body.rfind("zeta", 0) == 0) {
        std::size_t i = 4;
        std::size_t caret = body.find('^');
        const std::string order_text = body.substr(i, caret == std::string::npos ? std::string::npos : caret - i);
        long power = 1;
        try {
            const long order = std::stol(order_text);
            if (caret != std::string::npos) power = std::stol(body.substr(caret + 1));
            if (order <= 0) throw ParseError("root of unity order must be positive in '" + s + "'");
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % order) / static_cast<double>(order);
            return sign * Complex(std::cos(angle), std::sin(angle));
        } catch (const std::logic_error&) {
            throw ParseError("malformed root of unity '" + s + "'");
        }
    }
    if (body == "i") return {0.0, sign};
    try {
        std::size_t used = 0;
        const double v = std::stod(body, &used);
        if (used != body.size()) throw ParseError("malformed matrix entry '" + s + "'");
        return {sign * v, 0.0};
    } catch (const std::logic_error&) {
        throw ParseError("malformed matrix entry '" + s + "'");
    }
}

Representation parse_representation(const std::shared_ptr<const FiniteGroupAction>& group, const json& j) {
    const std::string name = j.contains("name") ? j["name"].get<std::string>() : std::string("rho");
    const std::size_t dim = member(j, "dim", "representation").get<std::size_t>();
    const json& gens = member(j, "generators", "representation");
    if (!gens.is_object()) throw ParseError("representation \"generators\" must map element names to matrices");
    std::map<int, ComplexMatrix> mats;
    for (const auto& [key, value] : gens.items()) {
        const int g = element_by_name(*group, json(key), "representation generator");
        if (!value.is_array() || value.size() != dim)
            throw ParseError("matrix for '" + key + "' must have " + std::to_string(dim) + " rows");
        ComplexMatrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            if (!value[r].is_array() || value[r].size() != dim)
                throw ParseError("matrix for '" + key + "' must have " + std::to_string(dim) + " columns");
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_entry(value[r][c]);
        }
        mats.emplace(g, std::move(m));
    }
    return Representation::from_generators(group, name, dim, mats);
}

json poly_to_json(const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p()) {
            out.push_back(c.get_si());
        } else {
            out.push_back(c.get_str());
        }
    }
    return out;
}

IntPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
    std::vector<BigInt> c;
    for (const auto& v : j) {
        if (v.is_number_integer()) {
            c.emplace_back(std::to_string(v.get<long long>()));
        } else if (v.is_string()) {
            try {
                c.emplace_back(v.get<std::string>());
            } catch (const std::invalid_argument&) {
                throw ParseError("malformed coefficient '" + v.get<std::string>() + "'");
            }
        } else {
            throw ParseError("polynomial coefficients must be integers or digit strings");
        }
    }
    return IntPoly(std::move(c));
}

json complex_poly_to_json(const ComplexPoly& p) {
    json out = json::array();
    for (const auto& z : p.coeffs()) out.push_back({{"re", z.real()}, {"im", z.imag()}});
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace ihara::io
