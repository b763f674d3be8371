#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "matrix.hpp"

namespace ihara {

using BigInt = mpz_class;
using BigRational = mpq_class;
using Complex = std::complex<double>;

// A coefficient is negligible when both parts are below this.
inline constexpr double kZeroTol = 1e-9;
// Relative tolerance for floating cross-checks between determinant routes.
inline constexpr double kDetTol = 1e-6;
// Default distance to the nearest integer accepted when rounding.
inline constexpr double kRoundTol = 1e-6;

/// Dense univariate polynomial in u over an exact ring (BigInt or BigRational).
/// Canonical form: no trailing zero coefficients; the zero polynomial is empty.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial one() { return constant(T(1)); }
    static Polynomial monomial(const T& v, std::size_t degree) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = v;
        return Polynomial(std::move(c));
    }

    const std::vector<T>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(unsigned e) const {
        Polynomial r = one();
        Polynomial base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return r;
    }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<BigRational>;

/// Text form `c0 + c1*u + c2*u^2 + ...`; unit coefficients on u-powers are elided.
std::string to_string(const IntPoly& p);
/// Compact factor form used in factored displays, e.g. `1+u+2u^2`.
std::string to_compact_string(const IntPoly& p);
/// Parses either of the two text forms above.
IntPoly parse_int_poly(std::string_view text);

RatPoly to_rational(const IntPoly& p);

/// Exact quotient q with b = a*q, or nullopt when a does not divide b.
std::optional<IntPoly> divides(const IntPoly& a, const IntPoly& b);
std::optional<RatPoly> divides(const RatPoly& a, const RatPoly& b);

/// Polynomial with complex double coefficients; canonical form drops trailing
/// negligible coefficients (see kZeroTol).
class ComplexPoly {
public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }
    ComplexPoly(std::initializer_list<Complex> coeffs) : c_(coeffs) { trim(); }
    explicit ComplexPoly(const IntPoly& p);

    static ComplexPoly constant(Complex v) { return ComplexPoly(std::vector<Complex>{v}); }

    const std::vector<Complex>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Complex coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Complex(0.0, 0.0); }
    Complex eval(Complex x) const;

    ComplexPoly& operator+=(const ComplexPoly& o);
    ComplexPoly& operator-=(const ComplexPoly& o);
    ComplexPoly& operator*=(Complex s);
    friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
    friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
    friend ComplexPoly operator*(ComplexPoly a, Complex s) { return a *= s; }
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);

    ComplexPoly pow(unsigned e) const;

private:
    void trim();
    std::vector<Complex> c_;
};

bool negligible(Complex z);
/// Largest coefficientwise |a_i - b_i|.
double max_abs_difference(const ComplexPoly& a, const ComplexPoly& b);
/// Long division; returns (quotient, remainder).
std::pair<ComplexPoly, ComplexPoly> divmod(const ComplexPoly& num, const ComplexPoly& den);

template <class T>
using PolyMatrix = Matrix<Polynomial<T>>;
using IntPolyMatrix = Matrix<IntPoly>;
using ComplexPolyMatrix = Matrix<ComplexPoly>;

/// Exact determinant by fraction-free (Bareiss) elimination over Z[u].
IntPoly det_int(const IntPolyMatrix& m);
/// Same elimination over Q[u].
RatPoly det_rational(const Matrix<RatPoly>& m);
/// Determinant by evaluation at roots of unity and interpolation.
ComplexPoly det_complex(const ComplexPolyMatrix& m);
/// Scalar determinant with partial pivoting.
Complex det_scalar(Matrix<Complex> m);

/// Coefficients of 1/p through u^order.
std::vector<BigRational> series_reciprocal(const IntPoly& p, std::size_t order);
/// Coefficients of prod (1 - u^l)^-1 over the multiset of lengths.
std::vector<BigRational> euler_product_truncation(std::span<const std::size_t> prime_lengths,
                                                  std::size_t order);
std::vector<Complex> complex_series_reciprocal(const ComplexPoly& p, std::size_t order);

/// Rounds every coefficient to the nearest integer. Throws RoundingError
/// naming the worst coefficient when any lies farther than tol from an
/// integer (imaginary part included).
IntPoly round_to_int_poly(const ComplexPoly& p, double tol = kRoundTol);
/// Largest distance from any coefficient to the nearest real integer.
double rounding_residual(const ComplexPoly& p);

/// Factors known without general factorization: a structural (1-u^2)^e,
/// powers of 1+u and 1-u (paired off into the structural power when there is
/// one), then integer factors of degree one and two found by
/// bounded trial division. Anything left stays as a single cofactor.
struct FactoredPoly {
    std::vector<std::pair<IntPoly, int>> factors;
    std::string render() const;
    IntPoly expand() const;
};
FactoredPoly factor_known(const IntPoly& p, int structural_one_minus_u2 = 0);

// Frequently used building blocks.
inline IntPoly one_minus_u2() { return IntPoly{1, 0, -1}; }
inline IntPoly one_plus_u() { return IntPoly{1, 1}; }
inline IntPoly one_minus_u() { return IntPoly{1, -1}; }

}  // namespace ihara
