#include <gtest/gtest.h>

#include "error.hpp"
#include "poly.hpp"
#include "support.hpp"

using namespace ihara;
using ihara::test::P;

TEST(Poly, ParseAndPrintRoundTrip) {
    for (const char* s : {"1 - 3*u + 2*u^2", "0", "-u", "1 - u^2", "5 + u^7"}) EXPECT_EQ(to_string(P(s)), s);
    EXPECT_EQ(P("1-3u+2u^2"), P("1 - 3*u + 2*u^2"));
    EXPECT_EQ(to_compact_string(P("1 + u + 2*u^2")), "1+u+2u^2");
    EXPECT_THROW(P("1 + x"), ParseError);
}

TEST(Poly, BigCoefficientsStayExact) {
    IntPoly p = P("1 - 2*u").pow(80);
    EXPECT_EQ(p.coeff(80), BigInt("1208925819614629174706176"));
    EXPECT_EQ(divides(P("1 - 2*u").pow(79), p), P("1 - 2*u"));
}

TEST(Poly, Divides) {
    const IntPoly a = P("1 - u"), b = P("1 - u^2");
    ASSERT_TRUE(divides(a, b));
    EXPECT_EQ(*divides(a, b), P("1 + u"));
    EXPECT_FALSE(divides(P("1 - 2*u"), b));
    EXPECT_FALSE(divides(P("2"), P("1 + u")));
}

TEST(Poly, DeterminantRoutesAgree) {
    IntPolyMatrix m(3, 3);
    const char* entries[3][3] = {{"1 - u", "2*u", "u^2"}, {"-u", "1 + 3*u^2", "1"}, {"u", "u", "1 - u"}};
    ComplexPolyMatrix cm(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            m(i, j) = P(entries[i][j]);
            cm(i, j) = ComplexPoly(m(i, j));
        }
    const IntPoly d = det_int(m);
    // Cofactor expansion by hand.
    const IntPoly manual = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    EXPECT_EQ(d, manual);
    EXPECT_EQ(round_to_int_poly(det_complex(cm)), d);
}

TEST(Poly, DeterminantNeedsPivoting) {
    IntPolyMatrix m(2, 2);
    m(0, 0) = IntPoly{};
    m(0, 1) = P("1");
    m(1, 0) = P("1");
    m(1, 1) = P("u");
    EXPECT_EQ(det_int(m), P("-1"));
}

TEST(Poly, SeriesAndEulerProduct) {
    // 1/(1-u)^2 = sum (n+1) u^n
    const auto s = series_reciprocal(P("1 - 2*u + u^2"), 6);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(s[n], BigRational(static_cast<long>(n + 1)));
    const std::vector<std::size_t> lengths{1, 1};
    EXPECT_EQ(euler_product_truncation(lengths, 6), s);
}

TEST(Poly, RoundingReportsWorstCoefficient) {
    ComplexPoly p{{1.0, 0.0}, {2.0 + 1e-9, 0.0}, {0.5, 0.0}};
    try {
        round_to_int_poly(p);
        FAIL();
    } catch (const RoundingError& e) {
        EXPECT_EQ(e.worst_index(), 2u);
    }
    EXPECT_EQ(round_to_int_poly(ComplexPoly{{1.0, 1e-12}, {-2.0, 0.0}}), P("1 - 2*u"));
}

TEST(Poly, FactoredDisplay) {
    const IntPoly k4 = P("1 - 8*u^3 - 6*u^4 + 16*u^6 + 24*u^7 - 3*u^8 - 16*u^9 - 24*u^10 + 16*u^12");
    const FactoredPoly f = factor_known(k4, 2);
    EXPECT_EQ(f.render(), "(1-u^2)^2 (1-u) (1-2u) (1+u+2u^2)^3");
    EXPECT_EQ(f.expand(), k4);
    EXPECT_EQ(factor_known(P("1 - 2*u + u^2")).render(), "(1-u)^2");
    EXPECT_EQ(factor_known(P("1 - u^2")).render(), "1-u^2");
    EXPECT_EQ(factor_known(P("1 - 2*u")).render(), "1-2u");
    EXPECT_EQ(factor_known(P("1")).render(), "1");
    // With a structural power, matching 1+u and 1-u join it.
    EXPECT_EQ(factor_known(P("1 - 6*u^2 + 9*u^4 - 4*u^6"), 1).render(), "(1-u^2)^2 (1-2u) (1+2u)");
    // Without one they stay apart unless nothing else is left.
    EXPECT_EQ(factor_known(P("1 - 2*u - u^2 + 2*u^3")).render(), "(1+u) (1-u) (1-2u)");
}

TEST(Poly, FactoredDisplayKeepsIrreducibleCofactor) {
    const IntPoly p = P("1 + u + u^3");
    const FactoredPoly f = factor_known(p * P("1 - u"));
    EXPECT_EQ(f.expand(), p * P("1 - u"));
    EXPECT_EQ(f.render(), "(1-u) (1+u+u^3)");
}
