#include "zeta.hpp"

namespace ihara {

namespace {

template <class T>
Matrix<Polynomial<T>> three_term_operand(const Graph& g, const std::vector<T>& charges) {
    const std::size_t n = g.vertex_count();
    const IntMatrix a = adjacency_matrix(g);
    Matrix<Polynomial<T>> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const T ca = charges[i] * T(static_cast<long>(a(i, j)));
            T cq(0);
            if (i == j) cq = charges[i] * T(static_cast<long>(g.valency(static_cast<int>(i)))) - T(1);
            m(i, j) = Polynomial<T>(std::vector<T>{T(i == j ? 1 : 0), -ca, cq});
        }
    }
    return m;
}

EulerReport compare(const IntPoly& zeta_inv, const std::vector<std::size_t>& lengths, std::size_t order) {
    EulerReport r;
    r.order = order;
    r.primes = lengths.size();
    const auto lhs = series_reciprocal(zeta_inv, order);
    const auto rhs = euler_product_truncation(lengths, order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs[i] != rhs[i]) {
            r.first_mismatch = static_cast<long>(i);
            return r;
        }
    }
    r.ok = true;
    return r;
}

}  // namespace

IntPoly apply_one_minus_u2_power(const IntPoly& p, long e) {
    if (e >= 0) return p * one_minus_u2().pow(static_cast<unsigned>(e));
    auto q = divides(one_minus_u2().pow(static_cast<unsigned>(-e)), p);
    if (!q) throw VerificationError("determinant is not divisible by (1-u^2)^" + std::to_string(-e));
    return *q;
}

IntPoly zeta_graph(const Graph& g) {
    if (g.leg_count() != 0)
        throw InvalidInput("the graph formula needs a graph without legs; use the graph-of-groups formula");
    std::vector<BigInt> ones(g.vertex_count(), BigInt(1));
    return apply_one_minus_u2_power(det_int(three_term_operand(g, ones)), g.betti() - 1);
}

IntPoly zeta_gog_two_term(const GraphOfGroups& x) {
    const IntMatrix w = half_edge_matrix(x);
    const std::size_t k = w.rows();
    IntPolyMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = IntPoly{i == j ? 1L : 0L, static_cast<long>(-w(i, j))};
    return det_int(m);
}

IntPoly zeta_gog_three_term(const GraphOfGroups& x) {
    const Graph& g = x.graph();
    std::vector<BigInt> charges;
    for (long c : x.charges()) charges.emplace_back(c);
    IntPoly p = det_int(three_term_operand(g, charges));
    p = p * one_plus_u().pow(static_cast<unsigned>(g.leg_count()));
    return apply_one_minus_u2_power(p, g.betti() - 1);
}

RatPoly zeta_three_term_rational(const Graph& g, const std::vector<BigRational>& charges) {
    if (charges.size() != g.vertex_count()) throw InvalidInput("charge count does not match vertex count");
    RatPoly p = det_rational(three_term_operand(g, charges));
    p = p * to_rational(one_plus_u().pow(static_cast<unsigned>(g.leg_count())));
    const long e = g.betti() - 1;
    const RatPoly f = to_rational(one_minus_u2().pow(static_cast<unsigned>(e < 0 ? -e : e)));
    if (e >= 0) return p * f;
    auto q = divides(f, p);
    if (!q) throw VerificationError("determinant is not divisible by (1-u^2)^" + std::to_string(-e));
    return *q;
}

IntPoly zeta_any_graph(const Graph& g) {
    if (g.leg_count() == 0) return zeta_graph(g);
    return zeta_gog_two_term(GraphOfGroups(g, std::vector<long>(g.vertex_count(), 1)));
}

EulerReport verify_euler(const GraphOfGroups& x, std::size_t order, bool allow_big) {
    std::vector<std::size_t> lengths;
    for_each_gog_prime(x, order, [&](const GogPath& p) { lengths.push_back(p.length()); }, allow_big);
    return compare(zeta_gog_two_term(x), lengths, order);
}

EulerReport verify_euler(const Graph& g, std::size_t order, bool allow_big) {
    std::vector<std::size_t> lengths;
    for_each_prime(g, order, [&](std::span<const int> p) { lengths.push_back(p.size()); }, allow_big);
    return compare(zeta_any_graph(g), lengths, order);
}

}  // namespace ihara
