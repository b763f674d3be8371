#include "group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace ihara {

namespace {

std::vector<int> identity_perm(std::size_t n) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    return p;
}

bool is_permutation(const std::vector<int>& p, std::size_t n) {
    if (p.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

std::vector<int> key_of(const GraphAutomorphism& a) {
    std::vector<int> k = a.half_edge_perm;
    k.insert(k.end(), a.vertex_perm.begin(), a.vertex_perm.end());
    return k;
}

bool single_char_labels(const Graph& g) {
    return std::all_of(g.vertex_labels().begin(), g.vertex_labels().end(),
                       [](const std::string& s) { return s.size() == 1; });
}

template <class Name>
std::string cycles(const std::vector<int>& perm, bool spaced, Name&& name) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start] || perm[start] == static_cast<int>(start)) continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first && spaced) out += ' ';
            out += name(static_cast<int>(x));
            first = false;
            x = static_cast<std::size_t>(perm[x]);
        }
        out += ')';
    }
    return out;
}

}  // namespace

GraphAutomorphism identity_automorphism(const Graph& g) {
    return {identity_perm(g.vertex_count()), identity_perm(g.half_edge_count())};
}

GraphAutomorphism compose(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    GraphAutomorphism r;
    r.vertex_perm.resize(b.vertex_perm.size());
    r.half_edge_perm.resize(b.half_edge_perm.size());
    for (std::size_t v = 0; v < b.vertex_perm.size(); ++v)
        r.vertex_perm[v] = a.vertex_perm[static_cast<std::size_t>(b.vertex_perm[v])];
    for (std::size_t h = 0; h < b.half_edge_perm.size(); ++h)
        r.half_edge_perm[h] = a.half_edge_perm[static_cast<std::size_t>(b.half_edge_perm[h])];
    return r;
}

void check_automorphism(const Graph& g, const GraphAutomorphism& a) {
    if (!is_permutation(a.vertex_perm, g.vertex_count()))
        throw InvalidInput("vertex map is not a permutation of the vertices");
    if (!is_permutation(a.half_edge_perm, g.half_edge_count()))
        throw InvalidInput("half-edge map is not a permutation of the half-edges");
    for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h) {
        const int gh = a.half_edge_perm[static_cast<std::size_t>(h)];
        if (g.root(gh) != a.vertex_perm[static_cast<std::size_t>(g.root(h))])
            throw InvalidInput("automorphism does not commute with the root map at half-edge " +
                               std::to_string(h));
        if (g.partner(gh) != a.half_edge_perm[static_cast<std::size_t>(g.partner(h))])
            throw InvalidInput("automorphism does not commute with the involution at half-edge " +
                               std::to_string(h));
    }
}

std::vector<int> parse_vertex_cycles(const Graph& g, std::string_view text) {
    std::vector<int> perm = identity_perm(g.vertex_count());
    std::vector<bool> used(g.vertex_count(), false);
    const bool compact = single_char_labels(g);
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto lookup = [&](const std::string& label) {
        auto v = g.find_vertex(label);
        if (!v) throw ParseError("unknown vertex '" + label + "' in cycle notation '" + std::string(text) + "'");
        return *v;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
        ++i;
        std::vector<int> cycle;
        skip_space();
        while (i < text.size() && text[i] != ')') {
            std::string token;
            while (i < text.size() && text[i] != ')' && text[i] != ',' &&
                   !std::isspace(static_cast<unsigned char>(text[i])))
                token.push_back(text[i++]);
            if (token.empty()) {
                ++i;  // separator
            } else if (compact && token.size() > 1 && !g.find_vertex(token)) {
                for (char ch : token) cycle.push_back(lookup(std::string(1, ch)));
            } else {
                cycle.push_back(lookup(token));
            }
            skip_space();
        }
        if (i >= text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
        ++i;
        for (int v : cycle) {
            if (used[static_cast<std::size_t>(v)])
                throw ParseError("vertex '" + g.vertex_label(v) + "' repeated in '" + std::string(text) + "'");
            used[static_cast<std::size_t>(v)] = true;
        }
        for (std::size_t j = 0; j < cycle.size(); ++j)
            perm[static_cast<std::size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
        skip_space();
    }
    return perm;
}

std::vector<int> infer_half_edge_perm(const Graph& g, const std::vector<int>& vertex_perm) {
    if (!is_permutation(vertex_perm, g.vertex_count()))
        throw InvalidInput("vertex map is not a permutation of the vertices");
    std::vector<int> out(g.half_edge_count());
    for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h) {
        const int src = vertex_perm[static_cast<std::size_t>(g.root(h))];
        const int dst = vertex_perm[static_cast<std::size_t>(g.target(h))];
        int found = -1, count = 0;
        for (int c : g.half_edges_at(src)) {
            if (g.target(c) == dst && g.is_leg(c) == g.is_leg(h)) {
                found = c;
                ++count;
            }
        }
        if (count == 0)
            throw InvalidInput("vertex permutation does not map half-edge " + std::to_string(h) +
                               " onto any half-edge");
        if (count > 1)
            throw InvalidInput("half-edge image of " + std::to_string(h) +
                               " is ambiguous; give the half-edge permutation explicitly");
        out[static_cast<std::size_t>(h)] = found;
    }
    return out;
}

std::vector<int> vertex_perm_from_half_edges(const Graph& g, const std::vector<int>& half_edge_perm) {
    if (!is_permutation(half_edge_perm, g.half_edge_count()))
        throw InvalidInput("half-edge map is not a permutation of the half-edges");
    std::vector<int> perm(g.vertex_count(), -1);
    for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h) {
        int& slot = perm[static_cast<std::size_t>(g.root(h))];
        const int image = g.root(half_edge_perm[static_cast<std::size_t>(h)]);
        if (slot >= 0 && slot != image) throw InvalidInput("half-edge map does not commute with the root map");
        slot = image;
    }
    for (std::size_t v = 0; v < perm.size(); ++v)
        if (perm[v] < 0) perm[v] = static_cast<int>(v);
    return perm;
}

std::string vertex_cycle_string(const Graph& g, const std::vector<int>& vertex_perm) {
    const bool compact = single_char_labels(g);
    std::string s = cycles(vertex_perm, !compact, [&](int v) { return g.vertex_label(v); });
    return s.empty() ? "1" : s;
}

std::string to_string(ActionClass c) {
    switch (c) {
        case ActionClass::free: return "free";
        case ActionClass::edge_free_not_free: return "edge-free (not free)";
        case ActionClass::not_edge_free: return "not edge-free";
    }
    return "?";
}

FiniteGroupAction::FiniteGroupAction(Graph graph, const std::vector<GraphAutomorphism>& generators,
                                     std::size_t max_order)
    : graph_(std::move(graph)) {
    for (const auto& gen : generators) check_automorphism(graph_, gen);
    elements_.push_back(identity_automorphism(graph_));
    index_.emplace(key_of(elements_[0]), 0);
    for (const auto& gen : generators) {
        auto [it, inserted] = index_.emplace(key_of(gen), static_cast<int>(elements_.size()));
        if (inserted) elements_.push_back(gen);
        if (it->second != 0 &&
            std::find(generators_.begin(), generators_.end(), it->second) == generators_.end())
            generators_.push_back(it->second);
    }
    // Closure by left multiplication with generators.
    for (std::size_t next = 0; next < elements_.size(); ++next) {
        for (int s : generators_) {
            GraphAutomorphism p = compose(elements_[static_cast<std::size_t>(s)], elements_[next]);
            if (index_.emplace(key_of(p), static_cast<int>(elements_.size())).second) {
                elements_.push_back(std::move(p));
                if (elements_.size() > max_order)
                    throw InvalidInput("group closure exceeds the maximum order " + std::to_string(max_order));
            }
        }
    }
    const std::size_t n = elements_.size();
    mult_.assign(n * n, -1);
    inv_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index_.find(key_of(compose(elements_[a], elements_[b])));
            if (it == index_.end()) throw VerificationError("group closure is not closed under composition");
            mult_[a * n + b] = it->second;
            if (it->second == 0) inv_[a] = static_cast<int>(b);
        }
        if (inv_[a] < 0) throw VerificationError("group element without inverse");
    }

    std::map<std::vector<int>, int> vertex_multiplicity;
    for (const auto& e : elements_) ++vertex_multiplicity[e.vertex_perm];
    names_.resize(n);
    names_[0] = "1";
    for (std::size_t a = 1; a < n; ++a) {
        const auto& e = elements_[a];
        if (vertex_multiplicity[e.vertex_perm] == 1) {
            names_[a] = vertex_cycle_string(graph_, e.vertex_perm);
        } else {
            names_[a] = "h" + cycles(e.half_edge_perm, true, [](int h) { return std::to_string(h); });
        }
    }
}

int FiniteGroupAction::element_order(int a) const {
    int k = 1;
    for (int p = a; p != identity(); p = multiply(p, a)) ++k;
    return k;
}

std::optional<int> FiniteGroupAction::find(const GraphAutomorphism& a) const {
    auto it = index_.find(key_of(a));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> FiniteGroupAction::find_by_name(std::string_view name) const {
    for (std::size_t a = 0; a < names_.size(); ++a)
        if (names_[a] == name) return static_cast<int>(a);
    std::vector<int> perm;
    try {
        perm = parse_vertex_cycles(graph_, name);
    } catch (const Error&) {
        return std::nullopt;
    }
    std::optional<int> hit;
    for (std::size_t a = 0; a < elements_.size(); ++a) {
        if (elements_[a].vertex_perm != perm) continue;
        if (hit) return std::nullopt;  // ambiguous
        hit = static_cast<int>(a);
    }
    return hit;
}

std::vector<int> FiniteGroupAction::stabilizer(int v) const {
    std::vector<int> out;
    for (std::size_t a = 0; a < elements_.size(); ++a)
        if (apply_vertex(static_cast<int>(a), v) == v) out.push_back(static_cast<int>(a));
    return out;
}

std::vector<int> FiniteGroupAction::vertex_orbit(int v) const {
    std::set<int> s;
    for (std::size_t a = 0; a < elements_.size(); ++a) s.insert(apply_vertex(static_cast<int>(a), v));
    return {s.begin(), s.end()};
}

std::vector<int> FiniteGroupAction::half_edge_orbit(int h) const {
    std::set<int> s;
    for (std::size_t a = 0; a < elements_.size(); ++a) s.insert(apply_half_edge(static_cast<int>(a), h));
    return {s.begin(), s.end()};
}

ActionClass classify_action(const FiniteGroupAction& a) {
    const Graph& g = a.graph();
    bool free = true;
    for (int e = 1; e < static_cast<int>(a.order()); ++e) {
        for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h) {
            const int gh = a.apply_half_edge(e, h);
            if (gh == h) return ActionClass::not_edge_free;
            if (gh == g.partner(h)) free = false;
        }
        for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
            if (a.apply_vertex(e, v) == v) free = false;
    }
    return free ? ActionClass::free : ActionClass::edge_free_not_free;
}

QuotientGraph quotient_graph(const FiniteGroupAction& a) {
    if (classify_action(a) == ActionClass::not_edge_free)
        throw NotEdgeFree("the action is not edge-free: some nonidentity element fixes a half-edge");
    const Graph& y = a.graph();
    QuotientGraph q{Graph(1, {}, {}), std::vector<int>(y.vertex_count(), -1),
                    std::vector<int>(y.half_edge_count(), -1)};

    GraphDescription d;
    for (int v = 0; v < static_cast<int>(y.vertex_count()); ++v) {
        if (q.vertex_projection[static_cast<std::size_t>(v)] >= 0) continue;
        const int id = static_cast<int>(d.vertices.size());
        for (int w : a.vertex_orbit(v)) q.vertex_projection[static_cast<std::size_t>(w)] = id;
        d.vertices.push_back(y.vertex_label(v));
    }
    auto vlabel = [&](int v) { return d.vertices[static_cast<std::size_t>(q.vertex_projection[static_cast<std::size_t>(v)])]; };

    std::vector<int> leg_reps;
    std::vector<int> orbit_id(y.half_edge_count(), -1);
    int next = 0;
    for (int f = 0; f < static_cast<int>(y.half_edge_count()); ++f) {
        if (orbit_id[static_cast<std::size_t>(f)] != -1) continue;
        const auto orbit = a.half_edge_orbit(f);
        const bool flipped = std::binary_search(orbit.begin(), orbit.end(), y.partner(f));
        if (flipped) {
            for (int x : orbit) orbit_id[static_cast<std::size_t>(x)] = -2 - static_cast<int>(leg_reps.size());
            leg_reps.push_back(f);
            continue;
        }
        for (int x : orbit) orbit_id[static_cast<std::size_t>(x)] = next;
        for (int x : a.half_edge_orbit(y.partner(f))) orbit_id[static_cast<std::size_t>(x)] = next + 1;
        next += 2;
        d.edges.emplace_back(vlabel(y.root(f)), vlabel(y.target(f)));
    }
    for (int f : leg_reps) d.legs.push_back(vlabel(y.root(f)));
    for (std::size_t f = 0; f < orbit_id.size(); ++f) {
        const int id = orbit_id[f];
        q.half_edge_projection[f] = id >= 0 ? id : next + (-2 - id);
    }
    q.graph = Graph::from_description(d);
    return q;
}

}  // namespace ihara
