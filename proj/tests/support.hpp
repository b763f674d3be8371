#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "covering.hpp"
#include "gog.hpp"
#include "io.hpp"
#include "lfunction.hpp"
#include "poly.hpp"
#include "zeta.hpp"

namespace ihara::test {

std::string data_path(const std::string& name);
std::string read_data(const std::string& name);

Graph load_graph(const std::string& name);
GraphOfGroups load_gog(const std::string& name);
std::shared_ptr<const FiniteGroupAction> load_action(const Graph& g, const std::string& name);
CoveringData k4_covering(const std::string& action, CoveringOptions opt = {});
Representation load_rep(const CoveringData& c, const std::string& name);
// Every irreducible shipped for the covering: trivial plus the data files.
std::vector<Representation> k4_irreps(const CoveringData& c, const std::string& action);

inline IntPoly P(const std::string& s) { return parse_int_poly(s); }

// W straight from its definition, independent of the library's builder.
IntMatrix w_by_definition(const GraphOfGroups& x);
BigInt trace_power(const IntMatrix& m, std::size_t n);

// All closed reduced gog paths of length n written out one by one.
std::vector<GogPath> all_closed_reduced(const GraphOfGroups& x, std::size_t n);
// Primes of length n from the explicit list: primitive paths up to rotation.
std::set<GogPath> brute_force_primes(const GraphOfGroups& x, std::size_t n);

// Random connected gog with n <= 5 vertices and charges <= 4, kept only when
// the number of reduced paths through length `order` stays within budget.
GraphOfGroups random_gog(std::mt19937_64& rng, std::size_t order = 10, double budget = 4e5);

// Edge-free action of a group of order <= 8 on a random connected graph,
// built from cosets of cyclic stabilizers so that half-edges are free.
std::shared_ptr<const FiniteGroupAction> random_edge_free_action(std::mt19937_64& rng,
                                                                 std::size_t max_half_edges = 48);

}  // namespace ihara::test
