#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gog.hpp"
#include "group.hpp"

namespace ihara {

/// Choices made when building Y//G. tree_seed is the root vertex of the
/// breadth-first spanning tree of X. choice_seed 0 takes the least valid id
/// at every choice; any other value draws each choice at random, which is how
/// choice independence is exercised.
struct CoveringOptions {
    int tree_seed = 0;
    std::uint64_t choice_seed = 0;
};

/// Sheets and Frobenius elements of an edge-free quotient pi: Y -> Y//G.
struct CoveringData {
    std::shared_ptr<const FiniteGroupAction> action;
    GraphOfGroups quotient;
    std::vector<int> vertex_projection;     // V(Y) -> V(X)
    std::vector<int> half_edge_projection;  // H(Y) -> H(X)
    std::vector<bool> tree_half_edges;      // over H(X)
    std::vector<int> vertex_lift;           // v -> v^T
    std::vector<int> identity_lift;         // h -> h^S
    std::vector<int> frobenius;             // h -> F(h)
    std::vector<int> sheet;                 // f -> N(f)
    CoveringOptions options;

    const Graph& cover() const { return action->graph(); }
    const Graph& base() const { return quotient.graph(); }
    std::size_t degree() const { return action->order(); }
};

CoveringData build_covering(std::shared_ptr<const FiniteGroupAction> action, CoveringOptions options = {});

/// Reassembles covering data from stored tables and checks every invariant;
/// throws VerificationError on any inconsistency.
CoveringData covering_from_tables(std::shared_ptr<const FiniteGroupAction> action, CoveringOptions options,
                                  std::vector<int> vertex_lift, std::vector<int> identity_lift,
                                  std::vector<int> frobenius, std::vector<bool> tree_half_edges);

/// Throws VerificationError when a structural invariant fails.
void check_covering(const CoveringData& c);

/// F(P) = g_0 F(h_1) g_1 ... g_{n-1} F(h_n).
int frobenius_of_path(const CoveringData& c, const GogPath& q);
/// f_j = g * gt_j * h_j^S with gt_1 = g_0 and gt_{j+1} = gt_j F(h_j) g_j.
HalfEdgePath lift_path(const CoveringData& c, const GogPath& q, int sheet);
/// g_j = F(h_j)^-1 N(f_j)^-1 N(f_{j+1}), indices cyclic.
GogPath image_of_closed_path(const CoveringData& c, const HalfEdgePath& p);

struct PrimeSplitting {
    GogPrime base;
    int frobenius = 0;
    std::size_t residual_degree = 0;  // f
    std::size_t primes_above = 0;     // g
    std::vector<GraphPrime> above;    // canonical, sorted
};

PrimeSplitting split_prime(const CoveringData& c, const GogPrime& q);
std::vector<PrimeSplitting> full_splitting_table(const CoveringData& c, std::size_t max_base_len,
                                                 bool allow_big = false);

/// Name of a prime of Y: the vertex word when Y is simple, else half-edge ids.
std::string cover_prime_name(const CoveringData& c, const GraphPrime& p);

struct PartitionCheck {
    bool ok = false;
    std::size_t cover_primes = 0;
    std::size_t covered = 0;
    std::string detail;
};
/// The primes above every base prime with f * length <= max_len, taken
/// together, are exactly the primes of Y of length <= max_len.
PartitionCheck partition_check(const CoveringData& c, std::size_t max_len, bool allow_big = false);

}  // namespace ihara
