#include "support.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#ifndef IHARA_DATA_DIR
#error "IHARA_DATA_DIR must point at the bundled data files"
#endif

namespace ihara::test {

std::string data_path(const std::string& name) { return std::string(IHARA_DATA_DIR) + "/" + name; }

std::string read_data(const std::string& name) { return io::read_file(data_path(name)); }

Graph load_graph(const std::string& name) {
    return Graph::from_description(io::parse_graph(io::parse_text(read_data(name), name)));
}

GraphOfGroups load_gog(const std::string& name) { return io::parse_gog(io::parse_text(read_data(name), name)); }

std::shared_ptr<const FiniteGroupAction> load_action(const Graph& g, const std::string& name) {
    return io::parse_action(g, io::parse_text(read_data(name), name));
}

CoveringData k4_covering(const std::string& action, CoveringOptions opt) {
    return build_covering(load_action(load_graph("k4.json"), action + ".json"), opt);
}

Representation load_rep(const CoveringData& c, const std::string& name) {
    return io::parse_representation(c.action, io::parse_text(read_data(name), name));
}

std::vector<Representation> k4_irreps(const CoveringData& c, const std::string& action) {
    std::vector<Representation> out{trivial_rep(c.action)};
    if (action == "c3") {
        out.push_back(load_rep(c, "c3_rho.json"));
        out.push_back(load_rep(c, "c3_rho2.json"));
    } else if (action == "a4") {
        out.push_back(load_rep(c, "a4_rho.json"));
        out.push_back(load_rep(c, "a4_rho2.json"));
        out.push_back(load_rep(c, "a4_sigma.json"));
    }
    return out;
}

IntMatrix w_by_definition(const GraphOfGroups& x) {
    const Graph& g = x.graph();
    const std::size_t k = g.half_edge_count();
    IntMatrix w(k, k);
    for (int h = 0; h < static_cast<int>(k); ++h) {
        for (int hp = 0; hp < static_cast<int>(k); ++hp) {
            const long c = x.charge(g.root(hp));
            long entry = 0;
            if (hp == g.partner(h)) {
                entry = c - 1;
            } else if (g.root(hp) == g.target(h)) {
                entry = c;
            }
            w(static_cast<std::size_t>(h), static_cast<std::size_t>(hp)) = entry;
        }
    }
    return w;
}

BigInt trace_power(const IntMatrix& m, std::size_t n) {
    const std::size_t k = m.rows();
    Matrix<BigInt> base(k, k), acc(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            base(i, j) = BigInt(std::to_string(m(i, j)));
            acc(i, j) = i == j ? 1 : 0;
        }
    }
    for (std::size_t step = 0; step < n; ++step) {
        Matrix<BigInt> next(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) {
                if (acc(i, l) == 0) continue;
                for (std::size_t j = 0; j < k; ++j) next(i, j) += acc(i, l) * base(l, j);
            }
        acc = std::move(next);
    }
    BigInt t = 0;
    for (std::size_t i = 0; i < k; ++i) t += acc(i, i);
    return t;
}

std::vector<GogPath> all_closed_reduced(const GraphOfGroups& x, std::size_t n) {
    const Graph& g = x.graph();
    std::vector<GogPath> out;
    if (n == 0) return out;
    GogPath cur;
    auto extend = [&](auto&& self) -> void {
        if (cur.length() == n) {
            const int first = cur.half_edges.front(), last = cur.half_edges.back();
            if (g.target(last) != g.root(first)) return;
            if (first == g.partner(last) && cur.elements.front() == 0) return;
            out.push_back(cur);
            return;
        }
        const int from = cur.length() == 0 ? -1 : cur.half_edges.back();
        for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h) {
            if (from >= 0 && g.root(h) != g.target(from)) continue;
            for (int e = 0; e < x.charge(g.root(h)); ++e) {
                if (from >= 0 && h == g.partner(from) && e == 0) continue;
                cur.elements.push_back(e);
                cur.half_edges.push_back(h);
                self(self);
                cur.elements.pop_back();
                cur.half_edges.pop_back();
            }
        }
    };
    extend(extend);
    return out;
}

std::set<GogPath> brute_force_primes(const GraphOfGroups& x, std::size_t n) {
    std::set<GogPath> primes;
    for (const GogPath& p : all_closed_reduced(x, n)) {
        std::vector<std::pair<int, int>> word;
        for (std::size_t j = 0; j < n; ++j) word.emplace_back(p.half_edges[j], p.elements[j]);
        bool primitive = true;
        for (std::size_t d = 1; d < n && primitive; ++d) {
            if (n % d != 0) continue;
            bool periodic = true;
            for (std::size_t j = 0; j < n && periodic; ++j) periodic = word[j] == word[(j + d) % n];
            primitive = !periodic;
        }
        if (!primitive) continue;
        auto best = word;
        for (std::size_t s = 1; s < n; ++s) {
            std::vector<std::pair<int, int>> r(word.begin() + static_cast<std::ptrdiff_t>(s), word.end());
            r.insert(r.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(s));
            best = std::min(best, r);
        }
        GogPath c;
        for (const auto& [h, e] : best) {
            c.half_edges.push_back(h);
            c.elements.push_back(e);
        }
        primes.insert(c);
    }
    return primes;
}

namespace {

double reduced_path_volume(const GraphOfGroups& x, std::size_t order) {
    const IntMatrix w = w_by_definition(x);
    const Graph& g = x.graph();
    const std::size_t k = w.rows();
    std::vector<double> row(k);
    for (std::size_t h = 0; h < k; ++h) row[h] = static_cast<double>(x.charge(g.root(static_cast<int>(h))));
    double total = 0;
    for (std::size_t len = 1; len <= order; ++len) {
        for (double v : row) total += v;
        std::vector<double> next(k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) next[j] += row[i] * static_cast<double>(w(i, j));
        row = std::move(next);
    }
    return total;
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
    return r;
}

std::vector<Perm> closure(const std::vector<Perm>& gens) {
    const std::size_t n = gens.front().size();
    Perm id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    std::vector<Perm> elems{id};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const Perm& g : gens) {
            Perm p = compose(g, elems[i]);
            if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
        }
    return elems;
}

Perm cycle_perm(std::size_t n, std::vector<std::vector<int>> cycles) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    for (const auto& c : cycles)
        for (std::size_t j = 0; j < c.size(); ++j) p[static_cast<std::size_t>(c[j])] = c[(j + 1) % c.size()];
    return p;
}

std::vector<std::vector<Perm>> small_groups() {
    std::vector<std::vector<Perm>> gens;
    gens.push_back({cycle_perm(1, {})});
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i;
        gens.push_back({cycle_perm(static_cast<std::size_t>(n), {c})});
    }
    gens.push_back({cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {{0, 2}, {1, 3}})});
    gens.push_back({cycle_perm(3, {{0, 1, 2}}), cycle_perm(3, {{0, 1}})});
    gens.push_back({cycle_perm(4, {{0, 1, 2, 3}}), cycle_perm(4, {{1, 3}})});
    gens.push_back({cycle_perm(6, {{0, 1}}), cycle_perm(6, {{2, 3, 4, 5}})});
    gens.push_back({cycle_perm(6, {{0, 1}}), cycle_perm(6, {{2, 3}}), cycle_perm(6, {{4, 5}})});
    return gens;
}

}  // namespace

GraphOfGroups random_gog(std::mt19937_64& rng, std::size_t order, double budget) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (;;) {
        const int n = uniform(1, 5);
        GraphDescription d;
        for (int v = 0; v < n; ++v) d.vertices.push_back(std::string(1, static_cast<char>('a' + v)));
        for (int v = 1; v < n; ++v) d.edges.emplace_back(d.vertices[static_cast<std::size_t>(uniform(0, v - 1))],
                                                         d.vertices[static_cast<std::size_t>(v)]);
        for (int e = uniform(0, 3); e > 0; --e)
            d.edges.emplace_back(d.vertices[static_cast<std::size_t>(uniform(0, n - 1))],
                                 d.vertices[static_cast<std::size_t>(uniform(0, n - 1))]);
        for (int l = uniform(0, 2); l > 0; --l) d.legs.push_back(d.vertices[static_cast<std::size_t>(uniform(0, n - 1))]);
        if (d.edges.empty() && d.legs.empty()) continue;
        std::vector<long> charges;
        for (int v = 0; v < n; ++v) charges.push_back(uniform(1, 4));
        GraphOfGroups x(Graph::from_description(d), std::move(charges));
        if (reduced_path_volume(x, order) <= budget) return x;
    }
}

std::shared_ptr<const FiniteGroupAction> random_edge_free_action(std::mt19937_64& rng, std::size_t max_half_edges) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const auto groups = small_groups();
    for (;;) {
        const auto& gens = groups[static_cast<std::size_t>(uniform(0, static_cast<int>(groups.size()) - 1))];
        const std::vector<Perm> elems = closure(gens);
        const int order = static_cast<int>(elems.size());
        auto index = [&](const Perm& p) {
            return static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
        };
        auto mul = [&](int a, int b) { return index(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)])); };

        // Base vertices with cyclic stabilizers; Y-vertices are left cosets.
        const int k = uniform(1, 3);
        std::vector<std::vector<int>> subgroup(static_cast<std::size_t>(k));
        for (auto& h : subgroup) {
            const int g = uniform(0, 2) == 0 ? uniform(0, order - 1) : 0;
            h = {0};
            for (int p = g; p != 0; p = mul(g, p)) h.push_back(p);
        }
        std::map<std::pair<int, std::vector<int>>, int> coset_id;
        std::vector<std::pair<int, std::vector<int>>> cosets;
        auto coset = [&](int v, int x) {
            std::vector<int> c;
            for (int h : subgroup[static_cast<std::size_t>(v)]) c.push_back(mul(x, h));
            std::sort(c.begin(), c.end());
            auto key = std::make_pair(v, c);
            auto [it, fresh] = coset_id.emplace(key, static_cast<int>(cosets.size()));
            if (fresh) cosets.push_back(key);
            return it->second;
        };
        for (int v = 0; v < k; ++v)
            for (int x = 0; x < order; ++x) coset(v, x);

        // Half-edge orbits are G-torsors: keys (orbit, x, side).
        struct Orbit {
            int kind;  // 0 edge, 1 flipped edge, 2 leg
            int u, v, a;
        };
        std::vector<Orbit> orbits;
        std::vector<int> involutions;
        for (int g = 1; g < order; ++g)
            if (mul(g, g) == 0) involutions.push_back(g);
        for (int e = uniform(1, 4); e > 0; --e) {
            int kind = uniform(0, 5) == 0 ? 2 : (uniform(0, 3) == 0 && !involutions.empty() ? 1 : 0);
            const int u = uniform(0, k - 1);
            if (kind == 0) {
                orbits.push_back({0, u, uniform(0, k - 1), uniform(0, order - 1)});
            } else if (kind == 1) {
                orbits.push_back({1, u, u, involutions[static_cast<std::size_t>(uniform(0, static_cast<int>(involutions.size()) - 1))]});
            } else {
                orbits.push_back({2, u, u, 0});
            }
        }
        std::size_t total = 0;
        for (const auto& o : orbits) total += static_cast<std::size_t>(order) * (o.kind == 0 ? 2 : 1);
        if (total > max_half_edges) continue;

        GraphDescription d;
        for (const auto& [v, c] : cosets) {
            std::string label = "v" + std::to_string(v) + "." + std::to_string(c.front());
            d.vertices.push_back(label);
        }
        auto label = [&](int v, int x) { return d.vertices[static_cast<std::size_t>(coset(v, x))]; };
        std::map<std::tuple<int, int, int>, int> half_edge_id;
        std::vector<std::tuple<int, int, int>> leg_keys;
        for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
            const Orbit& ob = orbits[static_cast<std::size_t>(o)];
            for (int x = 0; x < order; ++x) {
                if (ob.kind == 0) {
                    half_edge_id[{o, x, 0}] = static_cast<int>(2 * d.edges.size());
                    half_edge_id[{o, x, 1}] = static_cast<int>(2 * d.edges.size() + 1);
                    d.edges.emplace_back(label(ob.u, x), label(ob.v, mul(x, ob.a)));
                } else if (ob.kind == 1) {
                    const int xt = mul(x, ob.a);
                    if (xt < x) continue;
                    half_edge_id[{o, x, 0}] = static_cast<int>(2 * d.edges.size());
                    half_edge_id[{o, xt, 0}] = static_cast<int>(2 * d.edges.size() + 1);
                    d.edges.emplace_back(label(ob.u, x), label(ob.u, xt));
                } else {
                    leg_keys.emplace_back(o, x, 0);
                    d.legs.push_back(label(ob.u, x));
                }
            }
        }
        for (std::size_t l = 0; l < leg_keys.size(); ++l)
            half_edge_id[leg_keys[l]] = static_cast<int>(2 * d.edges.size() + l);

        std::optional<Graph> built;
        try {
            built.emplace(Graph::from_description(d));
        } catch (const InvalidInput&) {
            continue;  // disconnected
        }
        Graph& y = *built;

        std::vector<GraphAutomorphism> autos;
        for (const Perm& gp : gens) {
            const int g = index(gp);
            GraphAutomorphism a;
            a.vertex_perm.resize(y.vertex_count());
            for (int c = 0; c < static_cast<int>(cosets.size()); ++c) {
                const auto& [v, members] = cosets[static_cast<std::size_t>(c)];
                a.vertex_perm[static_cast<std::size_t>(c)] = coset(v, mul(g, members.front()));
            }
            a.half_edge_perm.resize(y.half_edge_count());
            for (const auto& [key, id] : half_edge_id) {
                const auto [o, x, s] = key;
                a.half_edge_perm[static_cast<std::size_t>(id)] = half_edge_id.at({o, mul(g, x), s});
            }
            autos.push_back(std::move(a));
        }
        return std::make_shared<const FiniteGroupAction>(std::move(y), autos);
    }
}

}  // namespace ihara::test
