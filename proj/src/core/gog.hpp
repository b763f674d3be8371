#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "group.hpp"

namespace ihara {

/// Edge-trivial graph of groups. The group at v has order charge(v). When the
/// gog comes from a quotient, stabilizer(v) lists the ambient element ids of
/// that group with the identity first; otherwise group elements are the
/// abstract indices 0..c(v)-1 with 0 the identity.
class GraphOfGroups {
public:
    GraphOfGroups(Graph graph, std::vector<long> charges);
    GraphOfGroups(Graph graph, std::vector<std::vector<int>> stabilizers,
                  std::shared_ptr<const FiniteGroupAction> ambient);

    const Graph& graph() const noexcept { return graph_; }
    long charge(int v) const { return charges_[static_cast<std::size_t>(v)]; }
    const std::vector<long>& charges() const noexcept { return charges_; }
    long max_charge() const;

    bool has_stabilizers() const noexcept { return ambient_ != nullptr; }
    const std::vector<int>& stabilizer(int v) const { return stabilizers_[static_cast<std::size_t>(v)]; }
    const std::shared_ptr<const FiniteGroupAction>& ambient() const noexcept { return ambient_; }
    // Ambient element id of the local index i at v.
    int ambient_element(int v, int i) const;
    // Local index of an ambient element of the group at v, if it belongs to it.
    std::optional<int> local_index(int v, int ambient_id) const;
    // "1" for the identity, else the ambient name or "g<i>@<vertex>".
    std::string element_name(int v, int i) const;

    friend bool operator==(const GraphOfGroups& a, const GraphOfGroups& b) {
        return a.graph_ == b.graph_ && a.charges_ == b.charges_ && a.stabilizers_ == b.stabilizers_;
    }

private:
    Graph graph_;
    std::vector<long> charges_;
    std::vector<std::vector<int>> stabilizers_;
    std::shared_ptr<const FiniteGroupAction> ambient_;
};

/// g_0 h_1 g_1 ... g_{n-1} h_n. elements[j] is the local index of g_j in the
/// group at root(half_edges[j]); the element precedes the half-edge.
struct GogPath {
    std::vector<int> elements;
    std::vector<int> half_edges;

    std::size_t length() const noexcept { return half_edges.size(); }
    friend auto operator<=>(const GogPath&, const GogPath&) = default;
};

bool is_gog_path(const GraphOfGroups& x, const GogPath& p);
bool is_closed_gog_path(const GraphOfGroups& x, const GogPath& p);
/// Closed, and cyclically h_{j+1} != conj(h_j) or g_j != 1.
bool is_reduced_closed_gog_path(const GraphOfGroups& x, const GogPath& p);
GogPath rotate(const GogPath& p, std::size_t shift);
GogPath power(const GogPath& p, std::size_t k);
/// Least rotation of the (g_{j-1}, h_j) pair sequence, ordered by (h, g).
GogPath canonical_rotation(const GogPath& p);
std::size_t minimal_period(const GogPath& p);
/// Readable form, e.g. "(243) h0 h2 h1"; identity elements are omitted.
std::string format_gog_path(const GraphOfGroups& x, const GogPath& p);

using GogPrime = GogPath;

IntMatrix half_edge_matrix(const GraphOfGroups& x);
IntMatrix charge_matrix(const GraphOfGroups& x);

/// Closed reduced gog paths of length n, counted with group multiplicities by
/// depth-first search over half-edges.
BigInt count_gog_closed_reduced(const GraphOfGroups& x, std::size_t n, bool allow_big = false);

void for_each_gog_prime(const GraphOfGroups& x, std::size_t max_len,
                        const std::function<void(const GogPath&)>& visit, bool allow_big = false);
/// Primes of length <= max_len in canonical rotation, sorted by (length, path).
std::vector<GogPrime> enumerate_gog_primes(const GraphOfGroups& x, std::size_t max_len, bool allow_big = false);

/// The leg replaced by an edge to a new vertex of charge 2.
struct LegSplit {
    GraphOfGroups gog;
    std::vector<int> half_edge_map;  // old id -> new id; the leg maps to the outgoing half-edge
    int new_vertex = -1;
    int outgoing = -1;  // rooted at the old vertex
    int returning = -1;

    /// Image of a path: each traversal g l becomes g e t conj(e), t the
    /// nontrivial element at the new vertex.
    GogPath map_path(const GogPath& p) const;
};
LegSplit split_leg(const GraphOfGroups& x, int leg);

}  // namespace ihara
