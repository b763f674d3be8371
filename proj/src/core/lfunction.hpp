#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covering.hpp"
#include "poly.hpp"

namespace ihara {

using ComplexMatrix = Matrix<Complex>;

/// A representation of the covering group, stored as one matrix per element.
class Representation {
public:
    /// Extends generator matrices, keyed by element id, along the closure
    /// order and checks the homomorphism property on all pairs.
    static Representation from_generators(std::shared_ptr<const FiniteGroupAction> group, std::string name,
                                          std::size_t dim, const std::map<int, ComplexMatrix>& generators);
    static Representation from_matrices(std::shared_ptr<const FiniteGroupAction> group, std::string name,
                                        std::vector<ComplexMatrix> matrices);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return dim_; }
    const FiniteGroupAction& group() const { return *group_; }
    const std::shared_ptr<const FiniteGroupAction>& group_ptr() const noexcept { return group_; }
    const ComplexMatrix& operator()(int g) const { return mats_[static_cast<std::size_t>(g)]; }
    Complex character(int g) const;
    /// All entries are integers within kZeroTol.
    bool integral() const noexcept { return integral_; }

private:
    Representation(std::shared_ptr<const FiniteGroupAction> group, std::string name, std::size_t dim,
                   std::vector<ComplexMatrix> mats);
    std::shared_ptr<const FiniteGroupAction> group_;
    std::string name_;
    std::size_t dim_;
    std::vector<ComplexMatrix> mats_;
    bool integral_ = false;
};

Representation trivial_rep(std::shared_ptr<const FiniteGroupAction> group);
/// rho(g) e_x = e_{x g^-1}.
Representation regular_rep(std::shared_ptr<const FiniteGroupAction> group);
Representation direct_sum(const Representation& a, const Representation& b);
/// m^-1 rho m.
Representation conjugate(const Representation& r, const ComplexMatrix& m);

ComplexMatrix matrix_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matrix_inverse(const ComplexMatrix& m);

struct ArtinizedMatrices {
    ComplexMatrix a;  // nd x nd
    ComplexMatrix q;
    ComplexMatrix c;
    ComplexMatrix w;  // kd x kd
    long leg_plus = 0;
    long leg_minus = 0;
};
ArtinizedMatrices build_artinized(const CoveringData& c, const Representation& rho);

struct LResult {
    ComplexPoly raw;
    std::optional<IntPoly> rounded;
    double residual = 0.0;  // worst distance to an integer before rounding
    bool exact = false;     // computed over Z because rho is integral
    std::string rounding_error;
};

struct LOptions {
    double tol = kRoundTol;
    // Use exact integer determinants when every rho(g) is an integer matrix.
    bool exact_when_integral = true;
};

LResult l_function_two_term(const CoveringData& c, const Representation& rho, const LOptions& opt = {});
LResult l_function_three_term(const CoveringData& c, const Representation& rho, const LOptions& opt = {});

struct LEulerReport {
    std::size_t order = 0;
    bool ok = false;
    std::size_t primes = 0;
    double worst = 0.0;
    long first_mismatch = -1;
};
/// Product over base primes of det(I - rho(F(Q)) u^len(Q))^-1 against the
/// series of the determinant formula.
LEulerReport l_euler_verify(const CoveringData& c, const Representation& rho, std::size_t order,
                            bool allow_big = false);

struct FactorizationReport {
    bool dims_ok = false;         // sum of d^2 equals #G
    bool orthonormal = false;     // characters orthonormal
    bool product_ok = false;      // zeta(Y)^-1 = prod L^-1 ^ d
    bool divisible = false;       // zeta(X)^-1 divides zeta(Y)^-1
    bool ok() const { return dims_ok && orthonormal && product_ok && divisible; }
    IntPoly zeta_cover;
    IntPoly zeta_base;
    std::vector<LResult> l_values;
    std::string detail;
};
FactorizationReport factorization_check(const CoveringData& c, const std::vector<Representation>& irreps,
                                        const LOptions& opt = {});

struct StructuralReport {
    bool trivial_ok = false;   // L(1) = zeta(X)
    bool regular_ok = false;   // L(rho_G) = zeta(Y)
    bool divisible = false;
    bool two_three_agree = false;
    bool ok() const { return trivial_ok && regular_ok && divisible && two_three_agree; }
};
StructuralReport structural_check(const CoveringData& c, const LOptions& opt = {});

}  // namespace ihara
