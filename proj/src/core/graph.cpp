#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "necklace.hpp"

namespace ihara {

Graph::Graph(std::size_t vertex_count, std::vector<int> root, std::vector<int> involution,
             std::vector<std::string> vertex_labels)
    : vertex_count_(vertex_count), root_(std::move(root)), involution_(std::move(involution)),
      labels_(std::move(vertex_labels)) {
    if (vertex_count_ == 0) throw InvalidInput("graph must have at least one vertex");
    if (root_.size() != involution_.size())
        throw InvalidInput("root map and involution have different sizes");
    const int k = static_cast<int>(root_.size());
    for (int h = 0; h < k; ++h) {
        const int r = root_[static_cast<std::size_t>(h)];
        if (r < 0 || static_cast<std::size_t>(r) >= vertex_count_)
            throw InvalidInput("half-edge " + std::to_string(h) + " has a dangling root");
        const int p = involution_[static_cast<std::size_t>(h)];
        if (p < 0 || p >= k || involution_[static_cast<std::size_t>(p)] != h)
            throw InvalidInput("involution is not self-inverse at half-edge " + std::to_string(h));
        if (p == h) ++legs_;
    }
    if (labels_.empty()) {
        for (std::size_t v = 0; v < vertex_count_; ++v) labels_.push_back(std::to_string(v));
    } else if (labels_.size() != vertex_count_) {
        throw InvalidInput("vertex label count does not match vertex count");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw InvalidInput("duplicate vertex label");

    at_.assign(vertex_count_, {});
    for (int h = 0; h < k; ++h) at_[static_cast<std::size_t>(root_[static_cast<std::size_t>(h)])].push_back(h);

    std::vector<bool> reached(vertex_count_, false);
    std::vector<int> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int h : at_[static_cast<std::size_t>(v)]) {
            const int w = target(h);
            if (!reached[static_cast<std::size_t>(w)]) {
                reached[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != vertex_count_) throw InvalidInput("graph is disconnected");
}

Graph Graph::from_description(const GraphDescription& d) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        if (!index.emplace(d.vertices[i], static_cast<int>(i)).second)
            throw InvalidInput("duplicate vertex label '" + d.vertices[i] + "'");
    }
    auto lookup = [&](const std::string& label) {
        auto it = index.find(label);
        if (it == index.end()) throw InvalidInput("unknown vertex '" + label + "'");
        return it->second;
    };
    std::vector<int> root, inv;
    for (const auto& [a, b] : d.edges) {
        const int h = static_cast<int>(root.size());
        root.push_back(lookup(a));
        root.push_back(lookup(b));
        inv.push_back(h + 1);
        inv.push_back(h);
    }
    for (const auto& l : d.legs) {
        inv.push_back(static_cast<int>(root.size()));
        root.push_back(lookup(l));
    }
    return Graph(d.vertices.size(), std::move(root), std::move(inv), d.vertices);
}

GraphDescription Graph::description() const {
    GraphDescription d;
    d.vertices = labels_;
    for (int h = 0; h < static_cast<int>(root_.size()); ++h) {
        const int p = partner(h);
        if (p == h) {
            d.legs.push_back(labels_[static_cast<std::size_t>(root(h))]);
        } else if (h < p) {
            d.edges.emplace_back(labels_[static_cast<std::size_t>(root(h))],
                                 labels_[static_cast<std::size_t>(root(p))]);
        }
    }
    return d;
}

std::size_t Graph::max_valency() const {
    std::size_t best = 0;
    for (const auto& hs : at_) best = std::max(best, hs.size());
    return best;
}

std::optional<int> Graph::find_vertex(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

bool Graph::is_simple() const {
    if (legs_ != 0) return false;
    std::set<std::pair<int, int>> seen;
    for (int h = 0; h < static_cast<int>(root_.size()); ++h) {
        const int a = root(h), b = target(h);
        if (a == b) return false;
        if (!seen.emplace(a, b).second) return false;
    }
    return true;
}

bool is_path(const Graph& g, std::span<const int> path) {
    if (path.empty()) return false;
    const int k = static_cast<int>(g.half_edge_count());
    for (int h : path)
        if (h < 0 || h >= k) return false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
        if (g.root(path[j + 1]) != g.target(path[j])) return false;
    return true;
}

bool is_closed_path(const Graph& g, std::span<const int> path) {
    return is_path(g, path) && g.target(path.back()) == g.root(path.front());
}

bool is_closed_reduced(const Graph& g, std::span<const int> path) {
    if (!is_closed_path(g, path)) return false;
    const std::size_t n = path.size();
    for (std::size_t j = 0; j < n; ++j)
        if (path[(j + 1) % n] == g.partner(path[j])) return false;
    return true;
}

std::vector<int> vertex_sequence(const Graph& g, std::span<const int> path) {
    std::vector<int> out;
    out.reserve(path.size() + 1);
    for (int h : path) out.push_back(g.root(h));
    if (!path.empty() && !is_closed_path(g, path)) out.push_back(g.target(path.back()));
    return out;
}

std::vector<int> canonical_rotation(std::span<const int> word) {
    const std::size_t n = word.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const int a = word[(s + i) % n], b = word[(best + i) % n];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = word[(best + i) % n];
    return out;
}

std::size_t minimal_period(std::span<const int> word) {
    const std::size_t n = word.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = word[i] == word[(i + p) % n];
        if (ok) return p;
    }
    return n;
}

std::vector<int> reversed_path(const Graph& g, std::span<const int> path) {
    std::vector<int> out;
    out.reserve(path.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(g.partner(*it));
    return out;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.vertex_count(), g.vertex_count(), 0);
    for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h)
        a(static_cast<std::size_t>(g.root(h)), static_cast<std::size_t>(g.target(h))) += 1;
    return a;
}

IntMatrix valency_matrix(const Graph& g) {
    IntMatrix q(g.vertex_count(), g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        q(v, v) = static_cast<long long>(g.valency(static_cast<int>(v)));
    return q;
}

void check_enumeration_guard(std::size_t length, std::size_t out_degree, bool allow_big) {
    if (allow_big || out_degree <= 1) return;
    const double cost = static_cast<double>(length) * std::log2(static_cast<double>(out_degree));
    if (cost > 40.0)
        throw GuardError("enumeration of length " + std::to_string(length) + " with out-degree " +
                         std::to_string(out_degree) + " exceeds the 2^40 budget; pass --allow-big to override");
}

namespace {

std::size_t non_backtracking_out_degree(const Graph& g) {
    const std::size_t v = g.max_valency();
    return v > 0 ? v - 1 : 0;
}

}  // namespace

BigInt count_closed_reduced_paths(const Graph& g, std::size_t n, bool allow_big) {
    if (n == 0) throw InvalidInput("path length must be at least 1");
    check_enumeration_guard(n, non_backtracking_out_degree(g), allow_big);
    unsigned long long total = 0;
    std::vector<int> path(n);
    auto dfs = [&](auto&& self, std::size_t pos) -> void {
        const int cur = path[pos - 1];
        const int back = g.partner(cur);
        if (pos == n) {
            if (g.root(path[0]) == g.root(back) && path[0] != back) ++total;
            return;
        }
        for (int next : g.half_edges_at(g.root(back))) {
            if (next == back) continue;
            path[pos] = next;
            self(self, pos + 1);
        }
    };
    for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h) {
        path[0] = h;
        dfs(dfs, 1);
    }
    return BigInt(std::to_string(total));
}

void for_each_prime(const Graph& g, std::size_t max_len,
                    const std::function<void(std::span<const int>)>& visit, bool allow_big) {
    check_enumeration_guard(max_len, non_backtracking_out_degree(g), allow_big);
    const std::size_t k = g.half_edge_count();
    std::vector<std::vector<int>> succ(k);
    for (int h = 0; h < static_cast<int>(k); ++h)
        for (int next : g.half_edges_at(g.target(h)))
            if (next != g.partner(h)) succ[static_cast<std::size_t>(h)].push_back(next);
    for_each_lyndon_cycle(
        k, max_len, [&](int s) -> const std::vector<int>& { return succ[static_cast<std::size_t>(s)]; },
        [&](int a, int b) { return g.root(b) == g.target(a) && b != g.partner(a); }, visit);
}

std::vector<GraphPrime> enumerate_primes(const Graph& g, std::size_t max_len, bool allow_big) {
    std::vector<GraphPrime> out;
    for_each_prime(
        g, max_len, [&](std::span<const int> w) { out.push_back(GraphPrime{{w.begin(), w.end()}}); },
        allow_big);
    std::sort(out.begin(), out.end(), [](const GraphPrime& a, const GraphPrime& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.half_edges < b.half_edges;
    });
    return out;
}

std::string vertex_word(const Graph& g, std::span<const int> path) {
    std::vector<int> verts = vertex_sequence(g, path);
    bool single = true;
    for (int v : verts) single = single && g.vertex_label(v).size() == 1;
    const std::size_t n = verts.size();
    std::vector<std::string> best;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::string> rot;
        for (std::size_t i = 0; i < n; ++i) rot.push_back(g.vertex_label(verts[(s + i) % n]));
        if (best.empty() || rot < best) best = std::move(rot);
    }
    std::string out;
    for (std::size_t i = 0; i < best.size(); ++i) {
        if (i && !single) out += '-';
        out += best[i];
    }
    return out;
}

}  // namespace ihara
