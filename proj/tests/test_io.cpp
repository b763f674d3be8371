#include <gtest/gtest.h>

#include <cmath>

#include "io.hpp"
#include "report.hpp"
#include "support.hpp"

using namespace ihara;
using namespace ihara::test;

TEST(Io, GraphRoundTrip) {
    for (const char* name : {"k4.json", "f3.json", "l2.json", "two_legs.json"}) {
        const GraphDescription d = io::parse_graph(io::parse_text(read_data(name), name));
        EXPECT_EQ(io::parse_graph(io::to_json(d)), d) << name;
    }
}

TEST(Io, GogRoundTripKeepsCharges) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 10; ++i) {
        const GraphOfGroups x = random_gog(rng, 4, 1e12);
        const GraphOfGroups y = io::parse_gog(io::parse_text(io::to_json(x).dump(), "gog"));
        EXPECT_EQ(y.graph(), x.graph());
        EXPECT_EQ(y.charges(), x.charges());
    }
}

TEST(Io, CoveringRoundTrip) {
    for (const char* action : {"c22", "c3", "v4", "c4", "a4"}) {
        for (std::uint64_t seed : {0u, 7u}) {
            const CoveringData c = k4_covering(action, {0, seed});
            const io::json j = io::to_json(c);
            const CoveringData back = io::parse_covering(io::parse_text(j.dump(), "covering"));
            EXPECT_EQ(back.identity_lift, c.identity_lift);
            EXPECT_EQ(back.vertex_lift, c.vertex_lift);
            EXPECT_EQ(back.tree_half_edges, c.tree_half_edges);
            EXPECT_EQ(back.quotient, c.quotient);
            for (std::size_t h = 0; h < c.frobenius.size(); ++h)
                EXPECT_EQ(back.action->name(back.frobenius[h]), c.action->name(c.frobenius[h]));
            EXPECT_EQ(io::to_json(back).dump(), j.dump());
        }
    }
}

TEST(Io, CoveringWithTamperedTablesIsRejected) {
    io::json j = io::to_json(k4_covering("c3"));
    j["tables"]["frobenius"][2] = "1";
    EXPECT_THROW(io::parse_covering(j), VerificationError);
}

TEST(Io, ParseErrorsCarryPosition) {
    try {
        io::parse_text("{\n  \"vertices\": [1,\n  ]\n}", "graph");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(io::parse_graph(io::json::parse(R"({"edges": []})")), ParseError);
    EXPECT_THROW(io::parse_graph(io::json::parse(R"({"vertices": ["a"], "edges": [["a"]]})")), ParseError);
    EXPECT_THROW(io::parse_gog(io::json::parse(R"({"vertices": ["a"], "charges": {"b": 2}})")), ParseError);
}

TEST(Io, MatrixEntries) {
    const Complex z = io::parse_entry("zeta3");
    EXPECT_NEAR(z.real(), -0.5, 1e-15);
    EXPECT_NEAR(z.imag(), std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(std::abs(io::parse_entry("-zeta4^2") - Complex(1.0)), 0.0, 1e-15);
    EXPECT_EQ(io::parse_entry(io::json::parse(R"({"re": 1, "im": -2})")), Complex(1.0, -2.0));
    EXPECT_EQ(io::parse_entry(-3), Complex(-3.0));
    EXPECT_THROW(io::parse_entry("zeta"), ParseError);
    EXPECT_THROW(io::parse_entry("two"), ParseError);
}

TEST(Io, PolynomialJson) {
    const IntPoly p = P("1 - 2*u").pow(70);
    const io::json j = io::poly_to_json(p);
    EXPECT_TRUE(j.back().is_string());
    EXPECT_TRUE(j.front().is_number());
    EXPECT_EQ(io::poly_from_json(j), p);
}

TEST(Io, ReportsAreDeterministic) {
    const CoveringData c = k4_covering("c3");
    EXPECT_EQ(quotient_report(c).json.dump(), quotient_report(k4_covering("c3")).json.dump());
    const Report r = zeta_report(load_graph("k4.json"), {6, 6, false});
    EXPECT_EQ(r.text.substr(0, r.text.find('\n')), "(1-u^2)^2 (1-u) (1-2u) (1+u+2u^2)^3");
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.json["factors"][0][0], "1-u^2");
    EXPECT_EQ(r.json["factors"][0][1], 2);
}
