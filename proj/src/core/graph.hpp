#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace ihara {

/// Vertices by label, edges as label pairs, legs as the label of their root.
/// Half-edge ids follow the listing: edge i owns 2i (rooted at its first
/// endpoint) and 2i+1; legs are numbered after all edges.
struct GraphDescription {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> legs;

    friend bool operator==(const GraphDescription&, const GraphDescription&) = default;
};

/// A finite connected graph with legs, stored as a root map and an involution
/// on half-edges. Fixed points of the involution are legs.
class Graph {
public:
    Graph(std::size_t vertex_count, std::vector<int> root, std::vector<int> involution,
          std::vector<std::string> vertex_labels = {});

    static Graph from_description(const GraphDescription& d);
    GraphDescription description() const;

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t half_edge_count() const noexcept { return root_.size(); }
    std::size_t edge_count() const noexcept { return (root_.size() - legs_) / 2; }
    std::size_t leg_count() const noexcept { return legs_; }
    // First Betti number m - n + 1.
    long betti() const noexcept {
        return static_cast<long>(edge_count()) - static_cast<long>(vertex_count_) + 1;
    }

    int root(int h) const { return root_[static_cast<std::size_t>(h)]; }
    int partner(int h) const { return involution_[static_cast<std::size_t>(h)]; }
    bool is_leg(int h) const { return partner(h) == h; }
    // Root of the partner, i.e. where a path continues after h.
    int target(int h) const { return root(partner(h)); }

    const std::vector<int>& roots() const noexcept { return root_; }
    const std::vector<int>& involution() const noexcept { return involution_; }
    // Half-edges rooted at v in increasing id order.
    const std::vector<int>& half_edges_at(int v) const { return at_[static_cast<std::size_t>(v)]; }
    std::size_t valency(int v) const { return half_edges_at(v).size(); }
    std::size_t max_valency() const;

    const std::string& vertex_label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
    std::optional<int> find_vertex(const std::string& label) const;

    // No loops, no legs and no parallel edges.
    bool is_simple() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.root_ == b.root_ &&
               a.involution_ == b.involution_ && a.labels_ == b.labels_;
    }

private:
    std::size_t vertex_count_;
    std::vector<int> root_;
    std::vector<int> involution_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> at_;
    std::size_t legs_ = 0;
};

using HalfEdgePath = std::vector<int>;

bool is_path(const Graph& g, std::span<const int> path);
bool is_closed_path(const Graph& g, std::span<const int> path);
// Closed and free of backtracks, read cyclically.
bool is_closed_reduced(const Graph& g, std::span<const int> path);
// v_0 .. v_{n-1}; the terminal vertex is omitted for closed paths.
std::vector<int> vertex_sequence(const Graph& g, std::span<const int> path);

/// Lexicographically least rotation.
std::vector<int> canonical_rotation(std::span<const int> word);
/// Smallest p dividing the length with word[i] == word[i + p] cyclically.
std::size_t minimal_period(std::span<const int> word);
std::vector<int> reversed_path(const Graph& g, std::span<const int> path);

/// A prime: a closed reduced primitive path, stored as its least rotation.
struct GraphPrime {
    std::vector<int> half_edges;
    std::size_t length() const noexcept { return half_edges.size(); }
    friend auto operator<=>(const GraphPrime&, const GraphPrime&) = default;
};

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix valency_matrix(const Graph& g);

/// Throws GuardError when length * log2(out_degree) exceeds 40 and the
/// caller has not opted in.
void check_enumeration_guard(std::size_t length, std::size_t out_degree, bool allow_big);

/// Number of closed reduced paths of length n, by depth-first enumeration.
BigInt count_closed_reduced_paths(const Graph& g, std::size_t n, bool allow_big = false);

void for_each_prime(const Graph& g, std::size_t max_len,
                    const std::function<void(std::span<const int>)>& visit, bool allow_big = false);
/// All primes of length <= max_len, sorted by (length, half-edge sequence).
std::vector<GraphPrime> enumerate_primes(const Graph& g, std::size_t max_len, bool allow_big = false);

/// Vertex-label sequence of a closed path, rotated to its least form. Used to
/// name primes of simple graphs, e.g. "123".
std::string vertex_word(const Graph& g, std::span<const int> path);

}  // namespace ihara
