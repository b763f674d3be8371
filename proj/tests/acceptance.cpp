// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "graph.hpp"
#include "support.hpp"

using namespace ihara;
using namespace ihara::test;

namespace {

// Pinned tolerances and budgets.
constexpr double kResidualTol = 1e-6;
constexpr std::size_t kEulerOrder = 10;
constexpr std::size_t kTraceOrder = 10;
constexpr std::size_t kPartitionLen = 5;
constexpr std::size_t kSplitLegLen = 8;
constexpr int kRandomGogs = 50;
constexpr int kRandomActions = 20;
constexpr int kSeedsPerCovering = 10;

const char* const kK4Actions[] = {"c22", "c3", "v4", "c4", "a4"};

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) why << what;
            ok = false;
        }
    }
};

// The corpus for the Euler and trace criteria: K4 quotients then random gogs.
const std::vector<GraphOfGroups>& gog_corpus() {
    static const std::vector<GraphOfGroups> corpus = [] {
        std::vector<GraphOfGroups> out;
        for (const char* a : kK4Actions) out.push_back(k4_covering(a).quotient);
        std::mt19937_64 rng(20240101);
        for (int i = 0; i < kRandomGogs; ++i) out.push_back(random_gog(rng, kEulerOrder));
        return out;
    }();
    return corpus;
}

void criterion_1(Check& c) {
    const IntPoly u2 = one_minus_u2();
    for (long m = 1; m <= 4; ++m) {
        const IntPoly f = u2.pow(static_cast<unsigned>(m - 1)) * P("1 - u") * IntPoly{1, -(2 * m - 1)};
        c.expect(zeta_graph(load_graph("f" + std::to_string(m) + ".json")) == f, "F_" + std::to_string(m));
    }
    for (long m = 2; m <= 4; ++m) {
        const IntPoly l = u2.pow(static_cast<unsigned>(m - 1)) * IntPoly{1, 0, -(m - 1) * (m - 1)};
        c.expect(zeta_graph(load_graph("l" + std::to_string(m) + ".json")) == l, "L_" + std::to_string(m));
    }
    c.expect(zeta_any_graph(load_graph("two_legs.json")) == P("1 - u^2"), "two legs");
    c.expect(zeta_graph(load_graph("k4.json")) == u2.pow(2) * P("1 - u") * P("1 - 2*u") * P("1 + u + 2*u^2").pow(3),
             "K4");
}

void criterion_2(Check& c) {
    struct Row {
        const char* action;
        long b1;
        std::size_t l;
        IntMatrix a, q, cm;
        IntPoly zeta;
    };
    const std::vector<Row> rows{
        {"c22", 1, 2, {{1, 2}, {2, 1}}, {{3, 0}, {0, 3}}, {{1, 0}, {0, 1}},
         P("1 + u").pow(2) * P("1 - u") * P("1 - 2*u") * P("1 + u + 2*u^2")},
        {"c3", 1, 0, {{0, 1}, {1, 2}}, {{1, 0}, {0, 3}}, {{3, 0}, {0, 1}},
         P("1 - u") * P("1 - 2*u") * P("1 + u + 2*u^2")},
        {"v4", 0, 3, {{3}}, {{3}}, {{1}}, P("1 + u").pow(2) * P("1 - 2*u")},
        {"c4", 1, 1, {{3}}, {{3}}, {{1}}, P("1 + u") * P("1 - u") * P("1 - 2*u")},
        {"a4", 0, 1, {{1}}, {{1}}, {{3}}, P("1 - 2*u")},
    };
    for (const Row& row : rows) {
        const GraphOfGroups& x = k4_covering(row.action).quotient;
        const Graph& g = x.graph();
        const std::string tag = std::string(row.action) + " ";
        c.expect(g.betti() == row.b1, tag + "b1");
        c.expect(g.leg_count() == row.l, tag + "l");
        c.expect(adjacency_matrix(g) == row.a, tag + "A");
        c.expect(valency_matrix(g) == row.q, tag + "Q");
        c.expect(charge_matrix(x) == row.cm, tag + "C");
        c.expect(zeta_gog_two_term(x) == row.zeta, tag + "two-term zeta");
        c.expect(zeta_gog_three_term(x) == row.zeta, tag + "three-term zeta");
    }
}

void criterion_3(Check& c) {
    const EulerReport k4 = verify_euler(load_graph("k4.json"), kEulerOrder);
    c.expect(k4.ok, "K4");
    std::size_t i = 0;
    for (const GraphOfGroups& x : gog_corpus()) {
        const EulerReport r = verify_euler(x, kEulerOrder);
        c.expect(r.ok, "gog #" + std::to_string(i) + " mismatch at u^" + std::to_string(r.first_mismatch));
        ++i;
    }
}

void criterion_4(Check& c) {
    const Graph k4 = load_graph("k4.json");
    std::vector<GraphOfGroups> all{GraphOfGroups(k4, std::vector<long>(k4.vertex_count(), 1))};
    for (const GraphOfGroups& x : gog_corpus()) all.push_back(x);
    std::size_t i = 0;
    for (const GraphOfGroups& x : all) {
        const IntMatrix w = w_by_definition(x);
        for (std::size_t n = 1; n <= kTraceOrder; ++n)
            c.expect(count_gog_closed_reduced(x, n) == trace_power(w, n),
                     "gog #" + std::to_string(i) + " n=" + std::to_string(n));
        ++i;
    }
}

std::vector<std::string> prime_names(const CoveringData& c, const PrimeSplitting& s) {
    std::vector<std::string> out;
    for (const auto& p : s.above) out.push_back(cover_prime_name(c, p));
    std::sort(out.begin(), out.end());
    return out;
}

void criterion_5(Check& c) {
    {
        const CoveringData cov = k4_covering("c3");
        const auto& a = *cov.action;
        auto local = [&](const char* name) { return *cov.quotient.local_index(0, *a.find_by_name(name)); };
        const int g = local("(234)"), g2 = local("(243)");
        const std::vector<std::pair<GogPath, std::vector<std::string>>> rows{
            {{{0}, {2}}, {"234"}},
            {{{0}, {3}}, {"243"}},
            {{{g2, 0, 0}, {0, 2, 1}}, {"123", "134", "142"}},
            {{{g, 0, 0}, {0, 3, 1}}, {"124", "132", "143"}},
            {{{g, 0, 0, 0}, {0, 2, 2, 1}}, {"1234", "1342", "1423"}},
            {{{g2, 0, 0, 0}, {0, 3, 3, 1}}, {"1243", "1324", "1432"}},
        };
        for (const auto& [base, above] : rows) {
            const PrimeSplitting s = split_prime(cov, canonical_rotation(base));
            c.expect(prime_names(cov, s) == above, "C3 " + format_gog_path(cov.quotient, base));
        }
    }
    {
        const CoveringData cov = k4_covering("a4");
        const auto& a = *cov.action;
        const int g = *cov.quotient.local_index(0, *a.find_by_name("(234)"));
        const int g2 = *cov.quotient.local_index(0, *a.find_by_name("(243)"));
        auto fg = [&](const GogPath& q, std::size_t f, std::size_t n, const std::string& what) {
            const PrimeSplitting s = split_prime(cov, canonical_rotation(q));
            c.expect(s.residual_degree == f && s.primes_above == n, "A4 " + what);
        };
        fg({{g}, {0}}, 3, 4, "gl");
        fg({{g2}, {0}}, 3, 4, "g^2l");
        fg({{g, g2}, {0, 0}}, 2, 6, "glg^2l");
    }
    for (const char* a : kK4Actions) {
        const PartitionCheck pc = partition_check(k4_covering(a), kPartitionLen);
        c.expect(pc.ok && pc.cover_primes == 14, std::string("partition ") + a + ": " + pc.detail);
    }
}

void expect_l(Check& c, const CoveringData& cov, const std::string& rep, const IntPoly& expected) {
    const Representation rho = load_rep(cov, rep);
    for (const LResult& l : {l_function_two_term(cov, rho, LOptions{kRoundTol, false}),
                             l_function_three_term(cov, rho, LOptions{kRoundTol, false})}) {
        c.expect(l.rounded && *l.rounded == expected, rep + " value");
        c.expect(l.residual < kResidualTol, rep + " residual " + std::to_string(l.residual));
    }
}

void criterion_6(Check& c) {
    const CoveringData c3 = k4_covering("c3");
    const IntPoly l3 = P("1 - u") * P("1 + u") * P("1 + u + 2*u^2");
    expect_l(c, c3, "c3_rho.json", l3);
    expect_l(c, c3, "c3_rho2.json", l3);
    const CoveringData a4 = k4_covering("a4");
    expect_l(c, a4, "a4_rho.json", P("1 + u"));
    expect_l(c, a4, "a4_rho2.json", P("1 + u"));
    expect_l(c, a4, "a4_sigma.json", P("1 - u") * P("1 + u + 2*u^2"));
}

void criterion_7(Check& c) {
    for (const char* a : {"c3", "a4"}) {
        const CoveringData cov = k4_covering(a);
        const StructuralReport s = structural_check(cov);
        c.expect(s.ok(), std::string("structural ") + a);
        const FactorizationReport f = factorization_check(cov, k4_irreps(cov, a));
        c.expect(f.ok(), std::string("factorization ") + a + ": " + f.detail);
    }
    for (const char* a : {"c22", "v4", "c4"}) c.expect(structural_check(k4_covering(a)).ok(), a);
    std::mt19937_64 rng(777);
    for (int i = 0; i < kRandomActions; ++i) {
        const CoveringData cov = build_covering(random_edge_free_action(rng));
        c.expect(structural_check(cov).ok(), "random action #" + std::to_string(i));
    }
}

// Everything a covering computes that should not depend on the choices made.
std::vector<IntPoly> invariants(const CoveringData& cov, const std::vector<Representation>& reps) {
    std::vector<IntPoly> out{zeta_gog_two_term(cov.quotient)};
    for (const Representation& r : reps) {
        const LResult l = l_function_three_term(cov, r);
        out.push_back(l.rounded ? *l.rounded : IntPoly{});
    }
    return out;
}

void criterion_8(Check& c) {
    auto run = [&](const std::shared_ptr<const FiniteGroupAction>& action, const std::string& irreps_for,
                   const std::string& tag) {
        const CoveringData first = build_covering(action);
        auto reps_for = [&](const CoveringData& cov) {
            std::vector<Representation> reps{trivial_rep(cov.action), regular_rep(cov.action)};
            if (!irreps_for.empty())
                for (auto& r : k4_irreps(cov, irreps_for)) reps.push_back(std::move(r));
            return reps;
        };
        const std::vector<IntPoly> expected = invariants(first, reps_for(first));
        const int n = static_cast<int>(first.base().vertex_count());
        for (int s = 0; s < kSeedsPerCovering; ++s) {
            const CoveringData cov = build_covering(action, {s % n, static_cast<std::uint64_t>(s * 7919 + 1)});
            c.expect(invariants(cov, reps_for(cov)) == expected, tag + " seed " + std::to_string(s));
        }
    };
    const Graph k4 = load_graph("k4.json");
    for (const char* a : kK4Actions) {
        const std::string name = a;
        run(load_action(k4, name + ".json"), name == "c3" || name == "a4" ? name : "", name);
    }
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 5; ++i) run(random_edge_free_action(rng), "", "random #" + std::to_string(i));
}

// Primes of X up to length `len` map injectively onto the primes of the split gog.
void check_split_bijection(Check& c, const GraphOfGroups& x, int leg, const std::string& tag) {
    const LegSplit s = split_leg(x, leg);
    std::set<GogPath> images;
    std::size_t kept = 0;
    for (const GogPath& p : enumerate_gog_primes(x, kSplitLegLen)) {
        const GogPath q = canonical_rotation(s.map_path(p));
        c.expect(is_reduced_closed_gog_path(s.gog, q) && minimal_period(q) == q.length(), tag + " image not prime");
        if (q.length() <= kSplitLegLen) {
            images.insert(q);
            ++kept;
        }
    }
    c.expect(images.size() == kept, tag + " not injective");
    const auto targets = enumerate_gog_primes(s.gog, kSplitLegLen);
    c.expect(std::set<GogPath>(targets.begin(), targets.end()) == images, tag + " not onto");
}

void criterion_9(Check& c) {
    const GraphOfGroups x = load_gog("leg_charge2.json");
    const LegSplit s = split_leg(x, 0);
    c.expect(zeta_gog_two_term(x) == P("1 - u"), "leg gog zeta");
    c.expect(zeta_gog_two_term(s.gog) == P("1 - u^2"), "split gog zeta");
    c.expect(zeta_gog_three_term(s.gog) == P("1 - u^2"), "split gog three-term");
    check_split_bijection(c, x, 0, "leg_charge2");
    auto every_leg = [&](const GraphOfGroups& q, const std::string& tag) {
        const Graph& g = q.graph();
        for (int h = 0; h < static_cast<int>(g.half_edge_count()); ++h)
            if (g.is_leg(h)) check_split_bijection(c, q, h, tag + " leg " + std::to_string(h));
    };
    for (const char* a : {"c22", "v4", "c4", "a4"}) every_leg(k4_covering(a).quotient, std::string("K4/") + a);
    every_leg(load_gog("two_legs_charge1.json"), "two_legs");
}

}  // namespace

int main() {
    struct Criterion {
        const char* what;
        double budget_s;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria{
        {"golden zeta polynomials", 1, criterion_1},
        {"K4 quotient table, two- and three-term", 1, criterion_2},
        {"Euler product through u^10", 60, criterion_3},
        {"closed reduced counts equal tr W^n, n <= 10", 60, criterion_4},
        {"splitting tables and partition to length 5", 5, criterion_5},
        {"L-function goldens", 1, criterion_6},
        {"structural identities", 120, criterion_7},
        {"invariance under tree and choice seeds", 120, criterion_8},
        {"leg splitting", 10, criterion_9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(secs < criteria[i].budget_s, "over time budget");
        if (!c.ok) ++failures;
        std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].what, secs,
                    c.ok ? "" : " - ", c.why.str().c_str());
    }
    return failures == 0 ? 0 : 1;
}
