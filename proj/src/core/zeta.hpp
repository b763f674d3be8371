#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gog.hpp"
#include "poly.hpp"

namespace ihara {

/// (1-u^2)^{b1-1} det(I - A u + (Q - I) u^2) for a graph without legs.
IntPoly zeta_graph(const Graph& g);
/// det(I - W u).
IntPoly zeta_gog_two_term(const GraphOfGroups& x);
/// (1-u^2)^{b1-1} (1+u)^l det(I - C A u + (C Q - I) u^2); a negative power
/// of 1-u^2 is applied by exact division.
IntPoly zeta_gog_three_term(const GraphOfGroups& x);
/// Three-term formula with arbitrary rational charges. Such weights have no
/// path interpretation, so only the formula is evaluated.
RatPoly zeta_three_term_rational(const Graph& g, const std::vector<BigRational>& charges);
/// Any graph: the three-term graph formula without legs, unit charges otherwise.
IntPoly zeta_any_graph(const Graph& g);

/// Multiplies by (1-u^2)^e, dividing exactly when e < 0.
IntPoly apply_one_minus_u2_power(const IntPoly& p, long e);

struct EulerReport {
    std::size_t order = 0;
    bool ok = false;
    std::size_t primes = 0;
    long first_mismatch = -1;  // coefficient index, -1 when all agree
};
/// Series of 1/zeta^-1 against the Euler product over enumerated primes.
EulerReport verify_euler(const GraphOfGroups& x, std::size_t order, bool allow_big = false);
EulerReport verify_euler(const Graph& g, std::size_t order, bool allow_big = false);

}  // namespace ihara
