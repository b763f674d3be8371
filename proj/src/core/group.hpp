#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace ihara {

/// Vertex and half-edge permutations, equivariant with the root map and the
/// involution.
struct GraphAutomorphism {
    std::vector<int> vertex_perm;
    std::vector<int> half_edge_perm;

    friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

GraphAutomorphism identity_automorphism(const Graph& g);
/// (a*b)(x) = a(b(x)).
GraphAutomorphism compose(const GraphAutomorphism& a, const GraphAutomorphism& b);
/// Throws InvalidInput naming the first violated condition.
void check_automorphism(const Graph& g, const GraphAutomorphism& a);

/// Parses cycle notation over vertex labels: "(2 3 4)", "(234)" when every
/// label is one character, "(1 2)(3 4)", or "" / "()" for the identity.
std::vector<int> parse_vertex_cycles(const Graph& g, std::string_view text);
/// Induces the half-edge permutation from a vertex permutation. Fails when a
/// half-edge has more than one possible image (loops, parallel edges, several
/// legs at a vertex).
std::vector<int> infer_half_edge_perm(const Graph& g, const std::vector<int>& vertex_perm);
/// Vertex permutation forced by a half-edge permutation; vertices without
/// half-edges only occur in the one-vertex graph.
std::vector<int> vertex_perm_from_half_edges(const Graph& g, const std::vector<int>& half_edge_perm);

std::string vertex_cycle_string(const Graph& g, const std::vector<int>& vertex_perm);

enum class ActionClass { free, edge_free_not_free, not_edge_free };
std::string to_string(ActionClass c);

/// A finite group given as the closure of generating automorphisms of a graph.
class FiniteGroupAction {
public:
    FiniteGroupAction(Graph graph, const std::vector<GraphAutomorphism>& generators,
                      std::size_t max_order = 100000);

    const Graph& graph() const noexcept { return graph_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const GraphAutomorphism& element(int g) const { return elements_[static_cast<std::size_t>(g)]; }
    const std::vector<GraphAutomorphism>& elements() const noexcept { return elements_; }
    // Ids of the input generators, after deduplication.
    const std::vector<int>& generators() const noexcept { return generators_; }

    int multiply(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int element_order(int a) const;
    static constexpr int identity() noexcept { return 0; }

    int apply_vertex(int g, int v) const { return element(g).vertex_perm[static_cast<std::size_t>(v)]; }
    int apply_half_edge(int g, int h) const { return element(g).half_edge_perm[static_cast<std::size_t>(h)]; }

    std::optional<int> find(const GraphAutomorphism& a) const;
    /// Looks up an element by its display name or by vertex cycle notation.
    std::optional<int> find_by_name(std::string_view name) const;
    const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }

    std::vector<int> stabilizer(int v) const;
    std::vector<int> vertex_orbit(int v) const;
    std::vector<int> half_edge_orbit(int h) const;

private:
    Graph graph_;
    std::vector<GraphAutomorphism> elements_;
    std::vector<int> generators_;
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::map<std::vector<int>, int> index_;
};

ActionClass classify_action(const FiniteGroupAction& a);

/// Y/G for an edge-free action. Orbits are numbered by least representative;
/// half-edge orbits follow the description convention (edge orbits first as
/// consecutive pairs, then legs), so the quotient round-trips through
/// GraphDescription. A vertex orbit is labelled by its least member.
struct QuotientGraph {
    Graph graph;
    std::vector<int> vertex_projection;
    std::vector<int> half_edge_projection;
};
QuotientGraph quotient_graph(const FiniteGroupAction& a);

}  // namespace ihara
