#include <gtest/gtest.h>

#include "group.hpp"
#include "support.hpp"

using namespace ihara;
using namespace ihara::test;

TEST(Group, ClosureOrders) {
    const Graph k4 = load_graph("k4.json");
    const std::map<std::string, std::size_t> orders{{"c22", 2}, {"c3", 3}, {"v4", 4}, {"c4", 4}, {"a4", 12}};
    for (const auto& [name, order] : orders) EXPECT_EQ(load_action(k4, name + ".json")->order(), order) << name;
}

TEST(Group, MultiplicationIsComposition) {
    const auto a = load_action(load_graph("k4.json"), "a4.json");
    for (int x = 0; x < static_cast<int>(a->order()); ++x) {
        EXPECT_EQ(a->multiply(x, a->inverse(x)), 0);
        for (int y = 0; y < static_cast<int>(a->order()); ++y)
            EXPECT_EQ(a->element(a->multiply(x, y)), compose(a->element(x), a->element(y)));
    }
}

TEST(Group, NamesAndLookup) {
    const auto a = load_action(load_graph("k4.json"), "a4.json");
    EXPECT_EQ(a->name(0), "1");
    const auto g = a->find_by_name("(234)");
    ASSERT_TRUE(g);
    EXPECT_EQ(a->name(*g), "(234)");
    EXPECT_EQ(a->find_by_name("(2 3 4)"), g);
    EXPECT_EQ(a->element_order(*g), 3);
    EXPECT_FALSE(a->find_by_name("(12)"));
}

TEST(Group, CycleParsing) {
    const Graph k4 = load_graph("k4.json");
    EXPECT_EQ(parse_vertex_cycles(k4, "(1 2)(3 4)"), (std::vector<int>{1, 0, 3, 2}));
    EXPECT_EQ(parse_vertex_cycles(k4, "(234)"), (std::vector<int>{0, 2, 3, 1}));
    EXPECT_EQ(parse_vertex_cycles(k4, ""), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_THROW(parse_vertex_cycles(k4, "(1 5)"), ParseError);
    EXPECT_THROW(parse_vertex_cycles(k4, "(1 2)(2 3)"), ParseError);
    EXPECT_THROW(parse_vertex_cycles(k4, "(1 2"), ParseError);
}

TEST(Group, HalfEdgeInferenceNeedsUniqueImages) {
    const Graph l2 = load_graph("l2.json");
    EXPECT_THROW(infer_half_edge_perm(l2, {1, 0}), InvalidInput);
    const Graph k4 = load_graph("k4.json");
    GraphAutomorphism a{parse_vertex_cycles(k4, "(1 2)"), {}};
    a.half_edge_perm = infer_half_edge_perm(k4, a.vertex_perm);
    EXPECT_NO_THROW(check_automorphism(k4, a));
    a.half_edge_perm[2] = 4;
    EXPECT_THROW(check_automorphism(k4, a), InvalidInput);
}

TEST(Group, Classification) {
    const Graph k4 = load_graph("k4.json");
    for (const char* name : {"c22.json", "c3.json", "v4.json", "c4.json", "a4.json"})
        EXPECT_EQ(classify_action(*load_action(k4, name)), ActionClass::edge_free_not_free) << name;

    // Rotating L_2 by a half turn fixes nothing and flips nothing.
    const Graph l2 = load_graph("l2.json");
    EXPECT_EQ(classify_action(FiniteGroupAction(l2, {GraphAutomorphism{{1, 0}, {3, 2, 1, 0}}})), ActionClass::free);
    EXPECT_EQ(classify_action(FiniteGroupAction(l2, {GraphAutomorphism{{1, 0}, {1, 0, 3, 2}}})),
              ActionClass::edge_free_not_free);

    // A transposition of K4 fixes the half-edges of edge {3,4}.
    const FiniteGroupAction t(k4, {GraphAutomorphism{parse_vertex_cycles(k4, "(1 2)"),
                                                     infer_half_edge_perm(k4, parse_vertex_cycles(k4, "(1 2)"))}});
    EXPECT_EQ(classify_action(t), ActionClass::not_edge_free);
    EXPECT_THROW(quotient_graph(t), NotEdgeFree);
}

TEST(Group, QuotientOfL2ByAllSubgroups) {
    // Rotation, and the two reflections.
    const Graph l2 = load_graph("l2.json");
    const GraphAutomorphism rotation{{1, 0}, {3, 2, 1, 0}};
    const GraphAutomorphism vertical{{1, 0}, {1, 0, 3, 2}};
    const GraphAutomorphism horizontal{{0, 1}, {2, 3, 0, 1}};
    const auto q_rot = quotient_graph(FiniteGroupAction(l2, {rotation}));
    EXPECT_EQ(q_rot.graph.vertex_count(), 1u);
    EXPECT_EQ(q_rot.graph.edge_count(), 1u);  // F_1
    const auto q_vert = quotient_graph(FiniteGroupAction(l2, {vertical}));
    EXPECT_EQ(q_vert.graph.leg_count(), 2u);  // one vertex, two legs
    EXPECT_EQ(q_vert.graph.vertex_count(), 1u);
    const auto q_hor = quotient_graph(FiniteGroupAction(l2, {horizontal}));
    EXPECT_EQ(q_hor.graph.vertex_count(), 2u);
    EXPECT_EQ(q_hor.graph.edge_count(), 1u);
    const auto q_all = quotient_graph(FiniteGroupAction(l2, {rotation, vertical}));
    EXPECT_EQ(q_all.graph.vertex_count(), 1u);
    EXPECT_EQ(q_all.graph.leg_count(), 1u);
}

TEST(Group, TrivialActionQuotientIsTheGraph) {
    const Graph g = load_graph("l3.json");
    const auto q = quotient_graph(FiniteGroupAction(g, {}));
    EXPECT_EQ(q.graph, g);
}

TEST(Group, StabilizersAndOrbits) {
    const auto a = load_action(load_graph("k4.json"), "c3.json");
    EXPECT_EQ(a->stabilizer(0).size(), 3u);
    EXPECT_EQ(a->stabilizer(1).size(), 1u);
    EXPECT_EQ(a->vertex_orbit(1), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(a->half_edge_orbit(6).size(), 3u);
}
