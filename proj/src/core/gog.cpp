#include "gog.hpp"

#include <algorithm>
#include <sstream>

#include "necklace.hpp"

namespace ihara {

GraphOfGroups::GraphOfGroups(Graph graph, std::vector<long> charges)
    : graph_(std::move(graph)), charges_(std::move(charges)) {
    if (charges_.size() != graph_.vertex_count())
        throw InvalidInput("charge count does not match vertex count");
    for (std::size_t v = 0; v < charges_.size(); ++v)
        if (charges_[v] < 1)
            throw InvalidInput("charge of vertex '" + graph_.vertex_label(static_cast<int>(v)) + "' must be at least 1");
}

GraphOfGroups::GraphOfGroups(Graph graph, std::vector<std::vector<int>> stabilizers,
                             std::shared_ptr<const FiniteGroupAction> ambient)
    : graph_(std::move(graph)), stabilizers_(std::move(stabilizers)), ambient_(std::move(ambient)) {
    if (!ambient_) throw InvalidInput("stabilizer data requires an ambient group");
    if (stabilizers_.size() != graph_.vertex_count())
        throw InvalidInput("stabilizer count does not match vertex count");
    for (std::size_t v = 0; v < stabilizers_.size(); ++v) {
        const auto& s = stabilizers_[v];
        if (s.empty() || s.front() != FiniteGroupAction::identity())
            throw InvalidInput("vertex group must list the identity first");
        for (int g : s)
            if (g < 0 || static_cast<std::size_t>(g) >= ambient_->order())
                throw InvalidInput("vertex group element out of range");
        for (int a : s)
            for (int b : s)
                if (std::find(s.begin(), s.end(), ambient_->multiply(a, b)) == s.end())
                    throw InvalidInput("vertex group at '" + graph_.vertex_label(static_cast<int>(v)) +
                                       "' is not closed under multiplication");
        charges_.push_back(static_cast<long>(s.size()));
    }
}

long GraphOfGroups::max_charge() const { return *std::max_element(charges_.begin(), charges_.end()); }

int GraphOfGroups::ambient_element(int v, int i) const {
    if (!ambient_) throw InvalidInput("graph of groups has no ambient group");
    return stabilizers_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
}

std::optional<int> GraphOfGroups::local_index(int v, int ambient_id) const {
    const auto& s = stabilizers_[static_cast<std::size_t>(v)];
    auto it = std::find(s.begin(), s.end(), ambient_id);
    if (it == s.end()) return std::nullopt;
    return static_cast<int>(it - s.begin());
}

std::string GraphOfGroups::element_name(int v, int i) const {
    if (i == 0) return "1";
    if (ambient_) return ambient_->name(ambient_element(v, i));
    return "g" + std::to_string(i) + "@" + graph_.vertex_label(v);
}

bool is_gog_path(const GraphOfGroups& x, const GogPath& p) {
    if (p.elements.size() != p.half_edges.size()) return false;
    if (!is_path(x.graph(), p.half_edges)) return false;
    for (std::size_t j = 0; j < p.length(); ++j) {
        const int g = p.elements[j];
        if (g < 0 || g >= x.charge(x.graph().root(p.half_edges[j]))) return false;
    }
    return true;
}

bool is_closed_gog_path(const GraphOfGroups& x, const GogPath& p) {
    return is_gog_path(x, p) && is_closed_path(x.graph(), p.half_edges);
}

bool is_reduced_closed_gog_path(const GraphOfGroups& x, const GogPath& p) {
    if (!is_closed_gog_path(x, p)) return false;
    const std::size_t n = p.length();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = (j + 1) % n;
        if (p.half_edges[k] == x.graph().partner(p.half_edges[j]) && p.elements[k] == 0) return false;
    }
    return true;
}

GogPath rotate(const GogPath& p, std::size_t shift) {
    GogPath r;
    const std::size_t n = p.length();
    for (std::size_t i = 0; i < n; ++i) {
        r.elements.push_back(p.elements[(i + shift) % n]);
        r.half_edges.push_back(p.half_edges[(i + shift) % n]);
    }
    return r;
}

GogPath power(const GogPath& p, std::size_t k) {
    GogPath r;
    for (std::size_t i = 0; i < k; ++i) {
        r.elements.insert(r.elements.end(), p.elements.begin(), p.elements.end());
        r.half_edges.insert(r.half_edges.end(), p.half_edges.begin(), p.half_edges.end());
    }
    return r;
}

namespace {

std::vector<std::pair<int, int>> symbols(const GogPath& p) {
    std::vector<std::pair<int, int>> s;
    for (std::size_t j = 0; j < p.length(); ++j) s.emplace_back(p.half_edges[j], p.elements[j]);
    return s;
}

}  // namespace

GogPath canonical_rotation(const GogPath& p) {
    const auto s = symbols(p);
    const std::size_t n = s.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = s[(r + i) % n];
            const auto& b = s[(best + i) % n];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    return rotate(p, best);
}

std::size_t minimal_period(const GogPath& p) {
    const auto s = symbols(p);
    const std::size_t n = s.size();
    for (std::size_t q = 1; q < n; ++q) {
        if (n % q) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = s[i] == s[(i + q) % n];
        if (ok) return q;
    }
    return n;
}

std::string format_gog_path(const GraphOfGroups& x, const GogPath& p) {
    std::ostringstream os;
    for (std::size_t j = 0; j < p.length(); ++j) {
        if (j) os << ' ';
        if (p.elements[j] != 0) os << x.element_name(x.graph().root(p.half_edges[j]), p.elements[j]) << ' ';
        os << 'h' << p.half_edges[j];
    }
    return os.str();
}

IntMatrix half_edge_matrix(const GraphOfGroups& x) {
    const Graph& g = x.graph();
    const std::size_t k = g.half_edge_count();
    IntMatrix w(k, k, 0);
    for (int h = 0; h < static_cast<int>(k); ++h) {
        for (int h2 : g.half_edges_at(g.target(h))) {
            const long c = x.charge(g.root(h2));
            w(static_cast<std::size_t>(h), static_cast<std::size_t>(h2)) = h2 == g.partner(h) ? c - 1 : c;
        }
    }
    return w;
}

IntMatrix charge_matrix(const GraphOfGroups& x) {
    const std::size_t n = x.graph().vertex_count();
    IntMatrix c(n, n, 0);
    for (std::size_t v = 0; v < n; ++v) c(v, v) = x.charge(static_cast<int>(v));
    return c;
}

BigInt count_gog_closed_reduced(const GraphOfGroups& x, std::size_t n, bool allow_big) {
    if (n == 0) throw InvalidInput("path length must be at least 1");
    const Graph& g = x.graph();
    check_enumeration_guard(n, g.max_valency(), allow_big);
    BigInt total = 0;
    std::vector<int> path(n);
    // weight accumulates the number of element choices g_1..g_{pos-1}.
    auto dfs = [&](auto&& self, std::size_t pos, unsigned long long weight, unsigned long long& acc) -> void {
        const int back = g.partner(path[pos - 1]);
        const int here = g.root(back);
        if (pos == n) {
            if (g.root(path[0]) != here) return;
            const long c = x.charge(here);
            const long choices = path[0] == back ? c - 1 : c;  // g_0 closes the cycle
            acc += weight * static_cast<unsigned long long>(choices);
            return;
        }
        const long c = x.charge(here);
        for (int next : g.half_edges_at(here)) {
            const long choices = next == back ? c - 1 : c;
            if (choices == 0) continue;
            path[pos] = next;
            self(self, pos + 1, weight * static_cast<unsigned long long>(choices), acc);
        }
    };
    for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h) {
        path[0] = h;
        unsigned long long acc = 0;
        dfs(dfs, 1, 1, acc);
        total += BigInt(std::to_string(acc));
    }
    return total;
}

void for_each_gog_prime(const GraphOfGroups& x, std::size_t max_len,
                        const std::function<void(const GogPath&)>& visit, bool allow_big) {
    const Graph& g = x.graph();
    const std::size_t branching = g.max_valency() * static_cast<std::size_t>(x.max_charge());
    check_enumeration_guard(max_len, branching > 1 ? branching - 1 : branching, allow_big);

    // Symbol (h, i): element i at root(h) followed by h.
    const std::size_t k = g.half_edge_count();
    std::vector<int> offset(k + 1, 0);
    for (std::size_t h = 0; h < k; ++h)
        offset[h + 1] = offset[h] + static_cast<int>(x.charge(g.root(static_cast<int>(h))));
    const std::size_t alphabet = static_cast<std::size_t>(offset[k]);
    std::vector<int> sym_h(alphabet), sym_g(alphabet);
    for (std::size_t h = 0; h < k; ++h)
        for (int i = offset[h]; i < offset[h + 1]; ++i) {
            sym_h[static_cast<std::size_t>(i)] = static_cast<int>(h);
            sym_g[static_cast<std::size_t>(i)] = i - offset[h];
        }
    auto allowed = [&](int a, int b) {
        const int ha = sym_h[static_cast<std::size_t>(a)], hb = sym_h[static_cast<std::size_t>(b)];
        if (g.root(hb) != g.target(ha)) return false;
        return hb != g.partner(ha) || sym_g[static_cast<std::size_t>(b)] != 0;
    };
    std::vector<std::vector<int>> succ(alphabet);
    for (std::size_t a = 0; a < alphabet; ++a) {
        const int ha = sym_h[a];
        for (int hb : g.half_edges_at(g.target(ha)))
            for (int b = offset[static_cast<std::size_t>(hb)]; b < offset[static_cast<std::size_t>(hb) + 1]; ++b)
                if (allowed(static_cast<int>(a), b)) succ[a].push_back(b);
        std::sort(succ[a].begin(), succ[a].end());
    }
    GogPath p;
    for_each_lyndon_cycle(
        alphabet, max_len, [&](int s) -> const std::vector<int>& { return succ[static_cast<std::size_t>(s)]; },
        allowed, [&](std::span<const int> word) {
            p.elements.clear();
            p.half_edges.clear();
            for (int s : word) {
                p.half_edges.push_back(sym_h[static_cast<std::size_t>(s)]);
                p.elements.push_back(sym_g[static_cast<std::size_t>(s)]);
            }
            visit(p);
        });
}

std::vector<GogPrime> enumerate_gog_primes(const GraphOfGroups& x, std::size_t max_len, bool allow_big) {
    std::vector<GogPrime> out;
    for_each_gog_prime(x, max_len, [&](const GogPath& p) { out.push_back(p); }, allow_big);
    std::sort(out.begin(), out.end(), [](const GogPath& a, const GogPath& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return symbols(a) < symbols(b);
    });
    return out;
}

LegSplit split_leg(const GraphOfGroups& x, int leg) {
    const Graph& g = x.graph();
    if (leg < 0 || static_cast<std::size_t>(leg) >= g.half_edge_count() || !g.is_leg(leg))
        throw InvalidInput("half-edge " + std::to_string(leg) + " is not a leg");
    GraphDescription d = g.description();
    std::string fresh = "x";
    while (g.find_vertex(fresh)) fresh += "'";
    d.vertices.push_back(fresh);

    // Legs are listed after edges in id order; drop the one being split.
    const std::size_t first_leg = 2 * g.edge_count();
    const std::size_t leg_pos = static_cast<std::size_t>(leg) - first_leg;
    d.legs.erase(d.legs.begin() + static_cast<std::ptrdiff_t>(leg_pos));
    d.edges.emplace_back(g.vertex_label(g.root(leg)), fresh);

    std::vector<long> charges = x.charges();
    charges.push_back(2);

    LegSplit out{GraphOfGroups(Graph::from_description(d), std::move(charges)), {}, 0, 0, 0};
    out.new_vertex = static_cast<int>(g.vertex_count());
    out.outgoing = static_cast<int>(first_leg);
    out.returning = static_cast<int>(first_leg) + 1;
    out.half_edge_map.resize(g.half_edge_count());
    for (std::size_t h = 0; h < g.half_edge_count(); ++h) {
        if (h < first_leg) {
            out.half_edge_map[h] = static_cast<int>(h);
        } else if (h == static_cast<std::size_t>(leg)) {
            out.half_edge_map[h] = out.outgoing;
        } else {
            out.half_edge_map[h] = static_cast<int>(h + (h < static_cast<std::size_t>(leg) ? 2 : 1));
        }
    }
    return out;
}

GogPath LegSplit::map_path(const GogPath& p) const {
    GogPath r;
    for (std::size_t j = 0; j < p.length(); ++j) {
        const int h = half_edge_map[static_cast<std::size_t>(p.half_edges[j])];
        r.elements.push_back(p.elements[j]);
        r.half_edges.push_back(h);
        if (h == outgoing) {
            r.elements.push_back(1);
            r.half_edges.push_back(returning);
        }
    }
    return r;
}

}  // namespace ihara
