#include "covering.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace ihara {

namespace {

class Chooser {
public:
    explicit Chooser(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    int pick(const std::vector<int>& candidates, const char* what) {
        if (candidates.empty()) throw VerificationError(std::string("no valid choice for ") + what);
        if (seed_ == 0) return candidates.front();
        std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
        return candidates[dist(rng_)];
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        if (seed_ != 0) std::shuffle(v.begin(), v.end(), rng_);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

GraphOfGroups quotient_gog(const std::shared_ptr<const FiniteGroupAction>& action, const Graph& x,
                           const std::vector<int>& vertex_lift) {
    std::vector<std::vector<int>> stabilizers;
    for (int vt : vertex_lift) stabilizers.push_back(action->stabilizer(vt));
    return GraphOfGroups(x, std::move(stabilizers), action);
}

std::vector<int> compute_sheets(const FiniteGroupAction& a, const std::vector<int>& identity_lift) {
    std::vector<int> sheet(a.graph().half_edge_count(), -1);
    for (int h_s : identity_lift) {
        for (int g = 0; g < static_cast<int>(a.order()); ++g) {
            const int f = a.apply_half_edge(g, h_s);
            if (sheet[static_cast<std::size_t>(f)] >= 0)
                throw VerificationError("half-edge " + std::to_string(f) + " lies on two sheets");
            sheet[static_cast<std::size_t>(f)] = g;
        }
    }
    for (std::size_t f = 0; f < sheet.size(); ++f)
        if (sheet[f] < 0) throw VerificationError("half-edge " + std::to_string(f) + " lies on no sheet");
    return sheet;
}

}  // namespace

CoveringData build_covering(std::shared_ptr<const FiniteGroupAction> action, CoveringOptions options) {
    if (!action) throw InvalidInput("missing group action");
    QuotientGraph q = quotient_graph(*action);
    const Graph& y = action->graph();
    const Graph& x = q.graph;
    if (options.tree_seed < 0 || static_cast<std::size_t>(options.tree_seed) >= x.vertex_count())
        throw InvalidInput("tree seed " + std::to_string(options.tree_seed) + " is not a vertex of the quotient");
    Chooser choose(options.choice_seed);

    auto preimages_at = [&](int h, int yv) {
        std::vector<int> out;
        for (int f : y.half_edges_at(yv))
            if (q.half_edge_projection[static_cast<std::size_t>(f)] == h) out.push_back(f);
        return out;
    };

    const std::size_t n = x.vertex_count(), k = x.half_edge_count();
    std::vector<int> vertex_lift(n, -1), identity_lift(k, -1), frobenius(k, -1);
    std::vector<bool> tree(k, false);

    // Spanning tree of X by breadth-first search over edges, lifted as it grows.
    std::vector<int> seed_pre;
    for (int v = 0; v < static_cast<int>(y.vertex_count()); ++v)
        if (q.vertex_projection[static_cast<std::size_t>(v)] == options.tree_seed) seed_pre.push_back(v);
    vertex_lift[static_cast<std::size_t>(options.tree_seed)] = choose.pick(seed_pre, "the lift of the tree root");
    std::deque<int> queue{options.tree_seed};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        std::vector<int> out = x.half_edges_at(u);
        choose.shuffle(out);
        for (int h : out) {
            if (x.is_leg(h)) continue;
            const int v = x.target(h);
            if (vertex_lift[static_cast<std::size_t>(v)] >= 0) continue;
            const int f = choose.pick(preimages_at(h, vertex_lift[static_cast<std::size_t>(u)]), "a tree lift");
            vertex_lift[static_cast<std::size_t>(v)] = y.target(f);
            tree[static_cast<std::size_t>(h)] = tree[static_cast<std::size_t>(x.partner(h))] = true;
            identity_lift[static_cast<std::size_t>(h)] = f;
            identity_lift[static_cast<std::size_t>(x.partner(h))] = y.partner(f);
            frobenius[static_cast<std::size_t>(h)] = frobenius[static_cast<std::size_t>(x.partner(h))] = 0;
            queue.push_back(v);
        }
    }

    for (int h = 0; h < static_cast<int>(k); ++h) {
        if (identity_lift[static_cast<std::size_t>(h)] >= 0) continue;
        const int u_t = vertex_lift[static_cast<std::size_t>(x.root(h))];
        if (x.is_leg(h)) {
            std::vector<int> legs, edges;
            for (int f : preimages_at(h, u_t)) (y.is_leg(f) ? legs : edges).push_back(f);
            if (!legs.empty()) {
                identity_lift[static_cast<std::size_t>(h)] = choose.pick(legs, "a leg lift");
                frobenius[static_cast<std::size_t>(h)] = 0;
                continue;
            }
            const int f = choose.pick(edges, "a flipped-edge lift");
            std::vector<int> flips;
            for (int g = 0; g < static_cast<int>(action->order()); ++g)
                if (action->apply_half_edge(g, f) == y.partner(f)) flips.push_back(g);
            if (flips.size() != 1 || action->element_order(flips[0]) != 2)
                throw VerificationError("flipped edge over leg " + std::to_string(h) +
                                        " is not flipped by a unique involution");
            identity_lift[static_cast<std::size_t>(h)] = f;
            frobenius[static_cast<std::size_t>(h)] = flips[0];
            continue;
        }
        // Non-tree edge, oriented from its lower half-edge id.
        const int hb = x.partner(h);
        const int f = choose.pick(preimages_at(h, u_t), "a non-tree lift");
        const int v_t = vertex_lift[static_cast<std::size_t>(x.root(hb))];
        std::vector<int> carriers;
        for (int g = 0; g < static_cast<int>(action->order()); ++g)
            if (action->apply_vertex(g, v_t) == y.target(f)) carriers.push_back(g);
        const int fh = choose.pick(carriers, "a Frobenius element");
        identity_lift[static_cast<std::size_t>(h)] = f;
        frobenius[static_cast<std::size_t>(h)] = fh;
        frobenius[static_cast<std::size_t>(hb)] = action->inverse(fh);
        identity_lift[static_cast<std::size_t>(hb)] = action->apply_half_edge(action->inverse(fh), y.partner(f));
    }

    return covering_from_tables(std::move(action), options, std::move(vertex_lift), std::move(identity_lift),
                                std::move(frobenius), std::move(tree));
}

CoveringData covering_from_tables(std::shared_ptr<const FiniteGroupAction> action, CoveringOptions options,
                                  std::vector<int> vertex_lift, std::vector<int> identity_lift,
                                  std::vector<int> frobenius, std::vector<bool> tree_half_edges) {
    QuotientGraph q = quotient_graph(*action);
    const std::size_t n = q.graph.vertex_count(), k = q.graph.half_edge_count();
    if (vertex_lift.size() != n || identity_lift.size() != k || frobenius.size() != k ||
        tree_half_edges.size() != k)
        throw VerificationError("covering tables do not match the quotient size");
    for (int v : vertex_lift)
        if (v < 0 || static_cast<std::size_t>(v) >= action->graph().vertex_count())
            throw VerificationError("vertex lift out of range");
    for (int h : identity_lift)
        if (h < 0 || static_cast<std::size_t>(h) >= action->graph().half_edge_count())
            throw VerificationError("half-edge lift out of range");
    for (int g : frobenius)
        if (g < 0 || static_cast<std::size_t>(g) >= action->order())
            throw VerificationError("Frobenius element out of range");

    GraphOfGroups gog = quotient_gog(action, q.graph, vertex_lift);
    std::vector<int> sheet = compute_sheets(*action, identity_lift);
    CoveringData c{std::move(action),
                   std::move(gog),
                   std::move(q.vertex_projection),
                   std::move(q.half_edge_projection),
                   std::move(tree_half_edges),
                   std::move(vertex_lift),
                   std::move(identity_lift),
                   std::move(frobenius),
                   std::move(sheet),
                   options};
    check_covering(c);
    return c;
}

void check_covering(const CoveringData& c) {
    const FiniteGroupAction& a = *c.action;
    const Graph& y = c.cover();
    const Graph& x = c.base();
    auto fail = [](const std::string& what) { throw VerificationError("covering invariant failed: " + what); };

    for (int v = 0; v < static_cast<int>(x.vertex_count()); ++v)
        if (c.vertex_projection[static_cast<std::size_t>(c.vertex_lift[static_cast<std::size_t>(v)])] != v)
            fail("vertex lift of " + x.vertex_label(v) + " does not project to it");

    // The lifted tree must be connected, i.e. tree edges lift to edges of Y.
    std::size_t tree_edges = 0;
    for (int h = 0; h < static_cast<int>(x.half_edge_count()); ++h) {
        const int hs = c.identity_lift[static_cast<std::size_t>(h)];
        const int fh = c.frobenius[static_cast<std::size_t>(h)];
        if (c.half_edge_projection[static_cast<std::size_t>(hs)] != h) fail("h^S does not lie over h");
        if (y.root(hs) != c.vertex_lift[static_cast<std::size_t>(x.root(h))]) fail("h^S is not rooted on the tree");
        if (c.frobenius[static_cast<std::size_t>(x.partner(h))] != a.inverse(fh)) fail("F(conj h) != F(h)^-1");
        if (c.tree_half_edges[static_cast<std::size_t>(h)]) {
            if (x.is_leg(h)) fail("the spanning tree contains a leg");
            if (fh != 0) fail("tree half-edge with nontrivial Frobenius element");
            if (c.identity_lift[static_cast<std::size_t>(x.partner(h))] != y.partner(hs))
                fail("tree edge lifts to two different edges");
            ++tree_edges;
        }
        if (x.is_leg(h)) {
            if (a.multiply(fh, fh) != 0) fail("F(l)^2 != 1 for a leg");
            if (y.is_leg(hs) ? fh != 0 : a.apply_half_edge(fh, hs) != y.partner(hs))
                fail("leg Frobenius element does not match its lift");
        }
        // F(h) is the sheet number of conj(h^S).
        if (c.sheet[static_cast<std::size_t>(y.partner(hs))] != fh) fail("F(h) is not the sheet of conj(h^S)");
    }
    if (tree_edges / 2 + 1 != x.vertex_count()) fail("the tree does not span the quotient");

    for (int f = 0; f < static_cast<int>(y.half_edge_count()); ++f) {
        const int h = c.half_edge_projection[static_cast<std::size_t>(f)];
        const int nf = c.sheet[static_cast<std::size_t>(f)];
        if (a.apply_half_edge(nf, c.identity_lift[static_cast<std::size_t>(h)]) != f) fail("N(f) h^S != f");
        if (c.sheet[static_cast<std::size_t>(y.partner(f))] != a.multiply(nf, c.frobenius[static_cast<std::size_t>(h)]))
            fail("N(conj f) != N(f) F(pi f)");
    }
}

int frobenius_of_path(const CoveringData& c, const GogPath& q) {
    if (!is_gog_path(c.quotient, q)) throw InvalidInput("not a path in the graph of groups");
    const FiniteGroupAction& a = *c.action;
    int acc = 0;
    for (std::size_t j = 0; j < q.length(); ++j) {
        const int h = q.half_edges[j];
        acc = a.multiply(acc, c.quotient.ambient_element(c.base().root(h), q.elements[j]));
        acc = a.multiply(acc, c.frobenius[static_cast<std::size_t>(h)]);
    }
    return acc;
}

HalfEdgePath lift_path(const CoveringData& c, const GogPath& q, int sheet) {
    if (!is_gog_path(c.quotient, q)) throw InvalidInput("not a path in the graph of groups");
    const FiniteGroupAction& a = *c.action;
    HalfEdgePath out;
    int running = c.quotient.ambient_element(c.base().root(q.half_edges[0]), q.elements[0]);
    for (std::size_t j = 0; j < q.length(); ++j) {
        const int h = q.half_edges[j];
        out.push_back(a.apply_half_edge(a.multiply(sheet, running), c.identity_lift[static_cast<std::size_t>(h)]));
        if (j + 1 < q.length()) {
            const int next = c.quotient.ambient_element(c.base().root(q.half_edges[j + 1]), q.elements[j + 1]);
            running = a.multiply(a.multiply(running, c.frobenius[static_cast<std::size_t>(h)]), next);
        }
    }
    return out;
}

GogPath image_of_closed_path(const CoveringData& c, const HalfEdgePath& p) {
    if (!is_closed_path(c.cover(), p)) throw InvalidInput("image is only defined for closed paths");
    const FiniteGroupAction& a = *c.action;
    const std::size_t n = p.size();
    GogPath q;
    for (std::size_t j = 0; j < n; ++j) {
        const int prev = p[(j + n - 1) % n];
        const int h_prev = c.half_edge_projection[static_cast<std::size_t>(prev)];
        const int h = c.half_edge_projection[static_cast<std::size_t>(p[j])];
        const int g = a.multiply(a.multiply(a.inverse(c.frobenius[static_cast<std::size_t>(h_prev)]),
                                            a.inverse(c.sheet[static_cast<std::size_t>(prev)])),
                                 c.sheet[static_cast<std::size_t>(p[j])]);
        auto local = c.quotient.local_index(c.base().root(h), g);
        if (!local) throw VerificationError("image element does not lie in the vertex group");
        q.elements.push_back(*local);
        q.half_edges.push_back(h);
    }
    return q;
}

PrimeSplitting split_prime(const CoveringData& c, const GogPrime& q) {
    if (!is_reduced_closed_gog_path(c.quotient, q) || minimal_period(q) != q.length())
        throw InvalidInput("base path is not a prime");
    PrimeSplitting s;
    s.base = q;
    s.frobenius = frobenius_of_path(c, q);
    s.residual_degree = static_cast<std::size_t>(c.action->element_order(s.frobenius));
    const GogPath qf = power(q, s.residual_degree);
    std::set<std::vector<int>> above;
    for (int x = 0; x < static_cast<int>(c.degree()); ++x) {
        HalfEdgePath p = lift_path(c, qf, x);
        if (!is_closed_reduced(c.cover(), p) || minimal_period(p) != p.size())
            throw VerificationError("lift of " + format_gog_path(c.quotient, q) + " is not a prime");
        above.insert(canonical_rotation(p));
    }
    for (const auto& p : above) s.above.push_back(GraphPrime{p});
    s.primes_above = s.above.size();
    if (s.primes_above * s.residual_degree != c.degree())
        throw VerificationError("f * g != #G for " + format_gog_path(c.quotient, q));
    return s;
}

std::vector<PrimeSplitting> full_splitting_table(const CoveringData& c, std::size_t max_base_len, bool allow_big) {
    std::vector<PrimeSplitting> out;
    for (const auto& q : enumerate_gog_primes(c.quotient, max_base_len, allow_big)) out.push_back(split_prime(c, q));
    return out;
}

std::string cover_prime_name(const CoveringData& c, const GraphPrime& p) {
    if (c.cover().is_simple()) return vertex_word(c.cover(), p.half_edges);
    std::string out;
    for (std::size_t i = 0; i < p.half_edges.size(); ++i) {
        if (i) out += '.';
        out += 'h' + std::to_string(p.half_edges[i]);
    }
    return out;
}

PartitionCheck partition_check(const CoveringData& c, std::size_t max_len, bool allow_big) {
    PartitionCheck r;
    std::vector<GraphPrime> union_above;
    for (const auto& s : full_splitting_table(c, max_len, allow_big)) {
        if (s.residual_degree * s.base.length() > max_len) continue;
        union_above.insert(union_above.end(), s.above.begin(), s.above.end());
    }
    std::vector<GraphPrime> primes = enumerate_primes(c.cover(), max_len, allow_big);
    std::sort(union_above.begin(), union_above.end());
    std::sort(primes.begin(), primes.end());
    r.cover_primes = primes.size();
    r.covered = union_above.size();
    r.ok = union_above == primes;
    if (!r.ok) {
        r.detail = "primes above base primes: " + std::to_string(r.covered) +
                   ", primes of the cover: " + std::to_string(r.cover_primes);
    }
    return r;
}

}  // namespace ihara
