#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ihara {

namespace {

bool exact_quotient(const BigInt& num, const BigInt& den, BigInt& out) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return true;
}

bool exact_quotient(const BigRational& num, const BigRational& den, BigRational& out) {
    out = num / den;
    return true;
}

template <class T>
std::optional<Polynomial<T>> divide_exact(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (a.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (b.is_zero()) return Polynomial<T>();
    if (b.degree() < a.degree()) return std::nullopt;
    const std::size_t da = static_cast<std::size_t>(a.degree());
    std::vector<T> rem = b.coeffs();
    std::vector<T> q(rem.size() - da, T(0));
    const T& lead = a.leading();
    for (std::size_t i = rem.size(); i-- > da;) {
        if (rem[i] == 0) continue;
        T factor;
        if (!exact_quotient(rem[i], lead, factor)) return std::nullopt;
        q[i - da] = factor;
        for (std::size_t j = 0; j <= da; ++j) rem[i - da + j] -= factor * a.coeffs()[j];
    }
    for (std::size_t i = 0; i < da; ++i)
        if (rem[i] != 0) return std::nullopt;
    return Polynomial<T>(std::move(q));
}

template <class T>
Polynomial<T> bareiss(Matrix<Polynomial<T>> m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial<T>::one();
    bool negate = false;
    Polynomial<T> prev = Polynomial<T>::one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            if (pivot == n || m(i, k).degree() < m(pivot, k).degree()) pivot = i;
        }
        if (pivot == n) return {};
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        const Polynomial<T> piv = m(k, k);
        const bool trivial_prev = prev.degree() == 0 && prev.leading() == 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Polynomial<T> mik = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial<T> num = m(i, j) * piv;
                if (!mik.is_zero() && !m(k, j).is_zero()) num -= mik * m(k, j);
                if (trivial_prev) {
                    m(i, j) = std::move(num);
                } else {
                    auto q = divide_exact(prev, num);
                    if (!q) throw Error(ErrorKind::verification, "Bareiss step was not exact");
                    m(i, j) = std::move(*q);
                }
            }
            m(i, k) = Polynomial<T>();
        }
        prev = piv;
    }
    Polynomial<T> det = m(n - 1, n - 1);
    return negate ? -det : det;
}

void append_term(std::ostringstream& os, const BigInt& c, std::size_t power, bool first, bool compact) {
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
        if (neg) os << '-';
    } else if (compact) {
        os << (neg ? '-' : '+');
    } else {
        os << (neg ? " - " : " + ");
    }
    if (power == 0) {
        os << mag.get_str();
        return;
    }
    if (mag != 1) os << mag.get_str() << (compact ? "" : "*");
    os << 'u';
    if (power > 1) os << '^' << power;
}

std::string render(const IntPoly& p, bool compact) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == 0) continue;
        append_term(os, p.coeffs()[i], i, first, compact);
        first = false;
    }
    return os.str();
}

std::vector<BigInt> signed_divisors(const BigInt& value, unsigned long limit) {
    BigInt mag = abs(value);
    std::vector<BigInt> out;
    if (mag == 0 || !mag.fits_ulong_p() || mag.get_ui() > limit) return out;
    const unsigned long v = mag.get_ui();
    for (unsigned long d = 1; d * d <= v; ++d) {
        if (v % d) continue;
        out.emplace_back(d);
        if (d != v / d) out.emplace_back(v / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_square(const BigInt& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

int strip_factor(IntPoly& rest, const IntPoly& factor) {
    int count = 0;
    while (rest.degree() >= factor.degree()) {
        auto q = divides(factor, rest);
        if (!q) break;
        rest = std::move(*q);
        ++count;
    }
    return count;
}

}  // namespace

std::string to_string(const IntPoly& p) { return render(p, false); }
std::string to_compact_string(const IntPoly& p) { return render(p, true); }

IntPoly parse_int_poly(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial text");
    std::vector<BigInt> coeffs;
    std::size_t i = 0;
    auto read_digits = [&](std::string& out) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
    };
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        } else if (i != 0) {
            throw ParseError("expected '+' or '-' at offset " + std::to_string(i) + " in '" + s + "'");
        }
        std::string digits;
        read_digits(digits);
        if (i < s.size() && s[i] == '*') {
            if (digits.empty()) throw ParseError("dangling '*' in '" + s + "'");
            ++i;
        }
        std::size_t power = 0;
        if (i < s.size() && s[i] == 'u') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string exp;
                read_digits(exp);
                if (exp.empty()) throw ParseError("missing exponent in '" + s + "'");
                power = std::stoul(exp);
            }
        } else if (digits.empty()) {
            throw ParseError("malformed term at offset " + std::to_string(i) + " in '" + s + "'");
        }
        BigInt c(digits.empty() ? std::string("1") : digits);
        if (neg) c = -c;
        if (coeffs.size() <= power) coeffs.resize(power + 1, BigInt(0));
        coeffs[power] += c;
    }
    return IntPoly(std::move(coeffs));
}

RatPoly to_rational(const IntPoly& p) {
    std::vector<BigRational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

std::optional<IntPoly> divides(const IntPoly& a, const IntPoly& b) { return divide_exact(a, b); }
std::optional<RatPoly> divides(const RatPoly& a, const RatPoly& b) { return divide_exact(a, b); }

// ---------------------------------------------------------------------------
// ComplexPoly

bool negligible(Complex z) { return std::abs(z.real()) < kZeroTol && std::abs(z.imag()) < kZeroTol; }

ComplexPoly::ComplexPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v.get_d(), 0.0);
    trim();
}

void ComplexPoly::trim() {
    while (!c_.empty() && negligible(c_.back())) c_.pop_back();
}

Complex ComplexPoly::eval(Complex x) const {
    Complex acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ComplexPoly& ComplexPoly::operator*=(Complex s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return ComplexPoly(std::move(out));
}

ComplexPoly ComplexPoly::pow(unsigned e) const {
    ComplexPoly r = constant(1.0);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

double max_abs_difference(const ComplexPoly& a, const ComplexPoly& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a.coeff(i) - b.coeff(i)));
    return worst;
}

std::pair<ComplexPoly, ComplexPoly> divmod(const ComplexPoly& num, const ComplexPoly& den) {
    if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (num.degree() < den.degree()) return {ComplexPoly(), num};
    std::vector<Complex> rem = num.coeffs();
    const std::size_t dd = static_cast<std::size_t>(den.degree());
    std::vector<Complex> q(rem.size() - dd);
    const Complex lead = den.coeffs().back();
    for (std::size_t i = rem.size(); i-- > dd;) {
        const Complex f = rem[i] / lead;
        q[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeffs()[j];
    }
    rem.resize(dd);
    return {ComplexPoly(std::move(q)), ComplexPoly(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Determinants

IntPoly det_int(const IntPolyMatrix& m) { return bareiss(m); }
RatPoly det_rational(const Matrix<RatPoly>& m) { return bareiss(m); }

Complex det_scalar(Matrix<Complex> m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Complex det(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(m(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (pivot != k) {
            m.swap_rows(pivot, k);
            det = -det;
        }
        const Complex piv = m(k, k);
        det *= piv;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = m(i, k) / piv;
            if (f == Complex(0.0, 0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

ComplexPoly det_complex(const ComplexPolyMatrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return ComplexPoly::constant(1.0);
    std::size_t total_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long row_max = 0;
        for (std::size_t j = 0; j < n; ++j) row_max = std::max(row_max, m(i, j).degree());
        total_degree += static_cast<std::size_t>(row_max);
    }
    const std::size_t samples = total_degree + 1;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
    auto root = [&](std::size_t e) { return std::polar(1.0, step * static_cast<double>(e % samples)); };

    std::vector<Complex> values(samples);
    Matrix<Complex> point(n, n);
    for (std::size_t s = 0; s < samples; ++s) {
        const Complex x = root(s);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) point(i, j) = m(i, j).eval(x);
        values[s] = det_scalar(point);
    }
    // The Vandermonde system at the roots of unity inverts to a discrete Fourier sum.
    std::vector<Complex> coeffs(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        Complex acc(0.0, 0.0);
        for (std::size_t s = 0; s < samples; ++s) acc += values[s] * std::conj(root(j * s));
        coeffs[j] = acc / static_cast<double>(samples);
    }
    return ComplexPoly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Series

std::vector<BigRational> series_reciprocal(const IntPoly& p, std::size_t order) {
    const BigInt p0 = p.coeff(0);
    if (p0 == 0) throw NotInvertible("power series with zero constant term has no reciprocal");
    std::vector<BigRational> s(order + 1);
    s[0] = BigRational(1, 1) / BigRational(p0);
    for (std::size_t n = 1; n <= order; ++n) {
        BigRational acc(0);
        const std::size_t top = std::min<std::size_t>(n, p.coeffs().size() - 1);
        for (std::size_t i = 1; i <= top; ++i) acc += BigRational(p.coeffs()[i]) * s[n - i];
        s[n] = -acc / BigRational(p0);
        s[n].canonicalize();
    }
    return s;
}

std::vector<BigRational> euler_product_truncation(std::span<const std::size_t> prime_lengths,
                                                  std::size_t order) {
    std::vector<std::size_t> multiplicity(order + 1, 0);
    for (std::size_t len : prime_lengths) {
        if (len == 0) throw InvalidInput("prime length must be at least 1");
        if (len <= order) ++multiplicity[len];
    }
    std::vector<BigInt> s(order + 1, BigInt(0));
    s[0] = 1;
    for (std::size_t len = 1; len <= order; ++len)
        for (std::size_t rep = 0; rep < multiplicity[len]; ++rep)
            for (std::size_t n = len; n <= order; ++n) s[n] += s[n - len];
    return {s.begin(), s.end()};
}

std::vector<Complex> complex_series_reciprocal(const ComplexPoly& p, std::size_t order) {
    const Complex p0 = p.coeff(0);
    if (negligible(p0)) throw NotInvertible("power series with zero constant term has no reciprocal");
    std::vector<Complex> s(order + 1);
    s[0] = 1.0 / p0;
    for (std::size_t n = 1; n <= order; ++n) {
        Complex acc(0.0, 0.0);
        for (std::size_t i = 1; i <= n; ++i) acc += p.coeff(i) * s[n - i];
        s[n] = -acc / p0;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Rounding

double rounding_residual(const ComplexPoly& p) {
    double worst = 0.0;
    for (const auto& z : p.coeffs())
        worst = std::max({worst, std::abs(z.imag()), std::abs(z.real() - std::round(z.real()))});
    return worst;
}

IntPoly round_to_int_poly(const ComplexPoly& p, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("rounding tolerance must be positive");
    std::size_t worst_index = 0;
    double worst = 0.0;
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Complex z = p.coeffs()[i];
        const double r = std::round(z.real());
        const double dist = std::max(std::abs(z.imag()), std::abs(z.real() - r));
        if (dist > worst) {
            worst = dist;
            worst_index = i;
        }
        out.emplace_back(r);
    }
    if (worst > tol) {
        const Complex z = p.coeffs()[worst_index];
        std::ostringstream os;
        os << "coefficient of u^" << worst_index << " = (" << z.real() << ", " << z.imag()
           << ") is " << worst << " from the nearest integer";
        throw RoundingError(os.str(), worst_index, worst);
    }
    return IntPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// Known factors

std::string FactoredPoly::render() const {
    if (factors.empty()) return "1";
    if (factors.size() == 1 && factors.front().second == 1) return to_compact_string(factors.front().first);
    std::string out;
    for (const auto& [f, e] : factors) {
        if (!out.empty()) out += ' ';
        if (f.degree() <= 0) {
            out += to_compact_string(f);
        } else {
            out += '(' + to_compact_string(f) + ')';
        }
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

IntPoly FactoredPoly::expand() const {
    IntPoly r = IntPoly::one();
    for (const auto& [f, e] : factors) r = r * f.pow(static_cast<unsigned>(e));
    return r;
}

FactoredPoly factor_known(const IntPoly& p, int structural_one_minus_u2) {
    FactoredPoly out;
    if (p.degree() <= 0) {
        if (!(p.degree() == 0 && p.leading() == 1)) out.factors.emplace_back(p, 1);
        return out;
    }
    IntPoly rest = p;
    if (structural_one_minus_u2 > 0) {
        if (auto q = divides(one_minus_u2().pow(static_cast<unsigned>(structural_one_minus_u2)), rest)) {
            rest = std::move(*q);
            out.factors.emplace_back(one_minus_u2(), structural_one_minus_u2);
        }
    }
    int plus = strip_factor(rest, one_plus_u());
    int minus = strip_factor(rest, one_minus_u());
    if (!out.factors.empty()) {
        // Fold matching pairs into the structural (1-u^2)^e.
        const int common = std::min(plus, minus);
        out.factors.front().second += common;
        plus -= common;
        minus -= common;
    } else if (plus == minus && plus > 0 && rest.degree() == 0 && rest.leading() == 1) {
        out.factors.emplace_back(one_minus_u2(), plus);
        return out;
    }
    if (plus) out.factors.emplace_back(one_plus_u(), plus);
    if (minus) out.factors.emplace_back(one_minus_u(), minus);

    const bool unit_constant = abs(rest.coeff(0)) == 1;
    if (unit_constant && rest.degree() >= 1) {
        for (const BigInt& a : signed_divisors(rest.leading(), 1000000)) {
            if (a < 2) continue;
            for (const BigInt& s : {BigInt(-a), a}) {
                const IntPoly f(std::vector<BigInt>{rest.coeff(0), s});
                if (int e = strip_factor(rest, f)) out.factors.emplace_back(f, e);
            }
        }
    }
    if (unit_constant && rest.degree() >= 2) {
        BigInt bound = 0;
        for (const auto& v : rest.coeffs()) bound = std::max(bound, BigInt(abs(v)));
        bound += 1;
        if (bound <= 10000) {
            for (const BigInt& cmag : signed_divisors(rest.leading(), 1000000)) {
                if (cmag > bound * bound) break;
                for (const BigInt& c : {cmag, BigInt(-cmag)}) {
                    for (BigInt b = -2 * bound; b <= 2 * bound && rest.degree() >= 2; ++b) {
                        if (is_square(b * b - 4 * c)) continue;
                        const IntPoly f(std::vector<BigInt>{rest.coeff(0), b, c});
                        if (int e = strip_factor(rest, f)) out.factors.emplace_back(f, e);
                    }
                }
            }
        }
    }
    if (!(rest.degree() == 0 && rest.leading() == 1)) out.factors.emplace_back(rest, 1);
    return out;
}

}  // namespace ihara
