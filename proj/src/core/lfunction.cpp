#include "lfunction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "zeta.hpp"

namespace ihara {

namespace {

constexpr double kHomTol = 1e-9;

ComplexMatrix identity_matrix(std::size_t d) { return ComplexMatrix::identity(d, Complex(1.0, 0.0), Complex(0.0, 0.0)); }

double max_entry_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

double max_entry(const ComplexMatrix& a) {
    double worst = 0.0;
    for (const auto& z : a.data()) worst = std::max(worst, std::abs(z));
    return worst;
}

bool near_integer(Complex z) {
    return std::abs(z.imag()) < kZeroTol && std::abs(z.real() - std::round(z.real())) < kZeroTol;
}

BigInt to_big(Complex z) { return BigInt(static_cast<long>(std::llround(z.real()))); }

// Places block b at block position (bi, bj) of m.
void put_block(ComplexMatrix& m, std::size_t bi, std::size_t bj, const ComplexMatrix& b) {
    const std::size_t d = b.rows();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(bi * d + i, bj * d + j) += b(i, j);
}

// I - m1 u - m2 u^2 over the chosen coefficient ring.
IntPolyMatrix int_operand(const ComplexMatrix& lin, const ComplexMatrix* quad) {
    const std::size_t n = lin.rows();
    IntPolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<BigInt> c{BigInt(i == j ? 1 : 0), BigInt(-to_big(lin(i, j)))};
            if (quad) c.push_back(BigInt(-to_big((*quad)(i, j))));
            m(i, j) = IntPoly(std::move(c));
        }
    return m;
}

ComplexPolyMatrix complex_operand(const ComplexMatrix& lin, const ComplexMatrix* quad) {
    const std::size_t n = lin.rows();
    ComplexPolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Complex> c{Complex(i == j ? 1.0 : 0.0, 0.0), -lin(i, j)};
            if (quad) c.push_back(-(*quad)(i, j));
            m(i, j) = ComplexPoly(std::move(c));
        }
    return m;
}

LResult finish(ComplexPoly raw, const LOptions& opt) {
    LResult r;
    r.residual = rounding_residual(raw);
    try {
        r.rounded = round_to_int_poly(raw, opt.tol);
    } catch (const RoundingError& e) {
        r.rounding_error = e.what();
    }
    r.raw = std::move(raw);
    return r;
}

LResult exact_result(const IntPoly& p) {
    LResult r;
    r.raw = ComplexPoly(p);
    r.rounded = p;
    r.exact = true;
    return r;
}

bool use_exact(const Representation& rho, const LOptions& opt) { return opt.exact_when_integral && rho.integral(); }

}  // namespace

Representation::Representation(std::shared_ptr<const FiniteGroupAction> group, std::string name, std::size_t dim,
                               std::vector<ComplexMatrix> mats)
    : group_(std::move(group)), name_(std::move(name)), dim_(dim), mats_(std::move(mats)) {
    if (!group_) throw InvalidInput("representation needs a group");
    if (dim_ == 0) throw DimensionError("representation dimension must be positive");
    if (mats_.size() != group_->order()) throw DimensionError("one matrix per group element is required");
    for (const auto& m : mats_)
        if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("representation matrix has the wrong size");
    if (max_entry_difference(mats_[0], identity_matrix(dim_)) > kHomTol)
        throw VerificationError("representation '" + name_ + "' does not send the identity to I");
    const std::size_t n = mats_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const ComplexMatrix prod = mats_[a] * mats_[b];
            const auto& target = mats_[static_cast<std::size_t>(group_->multiply(static_cast<int>(a), static_cast<int>(b)))];
            if (max_entry_difference(prod, target) > kHomTol * (1.0 + max_entry(target)))
                throw VerificationError("representation '" + name_ + "' is not a homomorphism at (" +
                                        group_->name(static_cast<int>(a)) + ", " +
                                        group_->name(static_cast<int>(b)) + ")");
        }
    integral_ = std::all_of(mats_.begin(), mats_.end(), [](const ComplexMatrix& m) {
        return std::all_of(m.data().begin(), m.data().end(), near_integer);
    });
}

Representation Representation::from_generators(std::shared_ptr<const FiniteGroupAction> group, std::string name,
                                               std::size_t dim, const std::map<int, ComplexMatrix>& generators) {
    if (!group) throw InvalidInput("representation needs a group");
    const std::size_t n = group->order();
    std::vector<ComplexMatrix> mats(n);
    std::vector<bool> known(n, false);
    mats[0] = identity_matrix(dim);
    known[0] = true;
    for (const auto& [g, m] : generators) {
        if (g < 0 || static_cast<std::size_t>(g) >= n) throw InvalidInput("generator id out of range");
        if (m.rows() != dim || m.cols() != dim) throw DimensionError("generator matrix has the wrong size");
    }
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int e = queue.front();
        queue.pop_front();
        for (const auto& [s, m] : generators) {
            const int p = group->multiply(s, e);
            if (known[static_cast<std::size_t>(p)]) continue;
            known[static_cast<std::size_t>(p)] = true;
            mats[static_cast<std::size_t>(p)] = m * mats[static_cast<std::size_t>(e)];
            queue.push_back(p);
        }
    }
    if (!std::all_of(known.begin(), known.end(), [](bool b) { return b; }))
        throw InvalidInput("representation generators do not generate the group");
    return Representation(std::move(group), std::move(name), dim, std::move(mats));
}

Representation Representation::from_matrices(std::shared_ptr<const FiniteGroupAction> group, std::string name,
                                             std::vector<ComplexMatrix> matrices) {
    const std::size_t dim = matrices.empty() ? 0 : matrices.front().rows();
    return Representation(std::move(group), std::move(name), dim, std::move(matrices));
}

Complex Representation::character(int g) const {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(g)(i, i);
    return t;
}

Representation trivial_rep(std::shared_ptr<const FiniteGroupAction> group) {
    std::vector<ComplexMatrix> mats(group->order(), identity_matrix(1));
    return Representation::from_matrices(std::move(group), "trivial", std::move(mats));
}

Representation regular_rep(std::shared_ptr<const FiniteGroupAction> group) {
    const std::size_t n = group->order();
    std::vector<ComplexMatrix> mats;
    for (int g = 0; g < static_cast<int>(n); ++g) {
        ComplexMatrix m(n, n, Complex(0.0, 0.0));
        for (int x = 0; x < static_cast<int>(n); ++x)
            m(static_cast<std::size_t>(group->multiply(x, group->inverse(g))), static_cast<std::size_t>(x)) = 1.0;
        mats.push_back(std::move(m));
    }
    return Representation::from_matrices(std::move(group), "regular", std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.group_ptr() != b.group_ptr()) throw InvalidInput("direct sum of representations of different groups");
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<ComplexMatrix> mats;
    for (int g = 0; g < static_cast<int>(a.group().order()); ++g) {
        ComplexMatrix m(da + db, da + db, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) m(i, j) = a(g)(i, j);
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < db; ++j) m(da + i, da + j) = b(g)(i, j);
        mats.push_back(std::move(m));
    }
    return Representation::from_matrices(a.group_ptr(), a.name() + "+" + b.name(), std::move(mats));
}

Representation conjugate(const Representation& r, const ComplexMatrix& m) {
    const ComplexMatrix inv = matrix_inverse(m);
    std::vector<ComplexMatrix> mats;
    for (int g = 0; g < static_cast<int>(r.group().order()); ++g) mats.push_back(inv * r(g) * m);
    return Representation::from_matrices(r.group_ptr(), r.name() + "^M", std::move(mats));
}

ComplexMatrix matrix_product(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }

ComplexMatrix matrix_inverse(const ComplexMatrix& m) {
    if (!m.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    ComplexMatrix a = m, inv = identity_matrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
        if (std::abs(a(pivot, k)) < kZeroTol) throw NotInvertible("matrix is singular");
        a.swap_rows(pivot, k);
        inv.swap_rows(pivot, k);
        const Complex p = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Complex f = a(i, k);
            if (f == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

ArtinizedMatrices build_artinized(const CoveringData& c, const Representation& rho) {
    if (&rho.group() != c.action.get()) throw InvalidInput("representation is not over the covering group");
    const Graph& x = c.base();
    const std::size_t n = x.vertex_count(), k = x.half_edge_count(), d = rho.dim();
    const Complex zero(0.0, 0.0);

    std::vector<ComplexMatrix> charge(n, ComplexMatrix(d, d, zero));
    for (std::size_t v = 0; v < n; ++v)
        for (int g : c.quotient.stabilizer(static_cast<int>(v)))
            for (std::size_t i = 0; i < d * d; ++i)
                charge[v](i / d, i % d) += rho(g)(i / d, i % d);
    auto frob = [&](int h) -> const ComplexMatrix& { return rho(c.frobenius[static_cast<std::size_t>(h)]); };

    ArtinizedMatrices m{ComplexMatrix(n * d, n * d, zero), ComplexMatrix(n * d, n * d, zero),
                        ComplexMatrix(n * d, n * d, zero), ComplexMatrix(k * d, k * d, zero), 0, 0};
    for (int h = 0; h < static_cast<int>(k); ++h) {
        for (int h2 : x.half_edges_at(x.target(h))) {
            ComplexMatrix cv = charge[static_cast<std::size_t>(x.root(h2))];
            if (h2 == x.partner(h))
                for (std::size_t i = 0; i < d; ++i) cv(i, i) -= 1.0;
            put_block(m.w, static_cast<std::size_t>(h), static_cast<std::size_t>(h2), cv * frob(h2));
        }
        put_block(m.a, static_cast<std::size_t>(x.root(h)), static_cast<std::size_t>(x.target(h)), frob(h));
    }
    for (std::size_t v = 0; v < n; ++v) {
        put_block(m.c, v, v, charge[v]);
        for (std::size_t i = 0; i < d; ++i) m.q(v * d + i, v * d + i) = static_cast<double>(x.valency(static_cast<int>(v)));
    }
    for (int l = 0; l < static_cast<int>(k); ++l) {
        if (!x.is_leg(l)) continue;
        const Complex t = rho.character(c.frobenius[static_cast<std::size_t>(l)]);
        if (!near_integer(t)) throw RoundingError("trace of rho(F(l)) is not an integer", 0, std::abs(t.imag()));
        const long tr = std::lround(t.real());
        const long dd = static_cast<long>(d);
        if ((dd + tr) % 2 != 0 || std::abs(tr) > dd)
            throw VerificationError("rho(F(l)) does not have eigenvalues +-1");
        m.leg_plus += (dd + tr) / 2;
        m.leg_minus += (dd - tr) / 2;
    }
    return m;
}

LResult l_function_two_term(const CoveringData& c, const Representation& rho, const LOptions& opt) {
    const ArtinizedMatrices m = build_artinized(c, rho);
    if (use_exact(rho, opt)) return exact_result(det_int(int_operand(m.w, nullptr)));
    return finish(det_complex(complex_operand(m.w, nullptr)), opt);
}

LResult l_function_three_term(const CoveringData& c, const Representation& rho, const LOptions& opt) {
    const ArtinizedMatrices m = build_artinized(c, rho);
    const Graph& x = c.base();
    const long e = (x.betti() - 1) * static_cast<long>(rho.dim());
    const ComplexMatrix ca = m.c * m.a;
    ComplexMatrix cq = m.c * m.q;
    for (std::size_t i = 0; i < cq.rows(); ++i) cq(i, i) -= 1.0;
    // The operand is I - CA u + (CQ - I) u^2, so the quadratic part enters negated.
    ComplexMatrix neg_cq = cq;
    for (std::size_t i = 0; i < neg_cq.data().size(); ++i) neg_cq(i / neg_cq.cols(), i % neg_cq.cols()) = -cq.data()[i];

    const IntPoly legs = one_plus_u().pow(static_cast<unsigned>(m.leg_plus)) *
                         one_minus_u().pow(static_cast<unsigned>(m.leg_minus));
    if (use_exact(rho, opt)) {
        IntPoly p = det_int(int_operand(ca, &neg_cq)) * legs;
        return exact_result(apply_one_minus_u2_power(p, e));
    }
    ComplexPoly p = det_complex(complex_operand(ca, &neg_cq)) * ComplexPoly(legs);
    const ComplexPoly f(one_minus_u2().pow(static_cast<unsigned>(std::abs(e))));
    if (e >= 0) {
        p = p * f;
    } else {
        auto [quot, rem] = divmod(p, f);
        double worst = 0.0;
        for (const auto& z : rem.coeffs()) worst = std::max(worst, std::abs(z));
        if (worst > opt.tol) {
            LResult r = finish(p, opt);
            r.rounded.reset();
            r.rounding_error = "determinant is not divisible by (1-u^2)^" + std::to_string(-e);
            return r;
        }
        p = quot;
    }
    return finish(std::move(p), opt);
}

LEulerReport l_euler_verify(const CoveringData& c, const Representation& rho, std::size_t order, bool allow_big) {
    LEulerReport r;
    r.order = order;
    const LResult l = l_function_two_term(c, rho);
    const ComplexPoly lhs_poly = l.rounded ? ComplexPoly(*l.rounded) : l.raw;
    const std::vector<Complex> lhs = complex_series_reciprocal(lhs_poly, order);

    // det(I - rho(g) t) once per group element.
    std::vector<std::optional<ComplexPoly>> charpoly(c.degree());
    auto char_of = [&](int g) -> const ComplexPoly& {
        auto& slot = charpoly[static_cast<std::size_t>(g)];
        if (!slot) slot = det_complex(complex_operand(rho(g), nullptr));
        return *slot;
    };

    std::vector<Complex> rhs(order + 1, Complex(0.0, 0.0));
    rhs[0] = 1.0;
    for_each_gog_prime(
        c.quotient, order,
        [&](const GogPath& q) {
            ++r.primes;
            const std::size_t len = q.length();
            const std::size_t terms = order / len;
            const std::vector<Complex> inv = complex_series_reciprocal(char_of(frobenius_of_path(c, q)), terms);
            std::vector<Complex> next(order + 1, Complex(0.0, 0.0));
            for (std::size_t i = 0; i <= order; ++i) {
                if (rhs[i] == Complex(0.0, 0.0)) continue;
                for (std::size_t t = 0; t <= terms && i + t * len <= order; ++t) next[i + t * len] += rhs[i] * inv[t];
            }
            rhs = std::move(next);
        },
        allow_big);
    r.ok = true;
    for (std::size_t i = 0; i <= order; ++i) {
        const double diff = std::abs(lhs[i] - rhs[i]);
        const double scaled = diff / std::max(1.0, std::abs(lhs[i]));
        r.worst = std::max(r.worst, scaled);
        if (scaled > kDetTol && r.ok) {
            r.ok = false;
            r.first_mismatch = static_cast<long>(i);
        }
    }
    return r;
}

FactorizationReport factorization_check(const CoveringData& c, const std::vector<Representation>& irreps,
                                        const LOptions& opt) {
    FactorizationReport r;
    const std::size_t order = c.degree();
    r.zeta_cover = zeta_any_graph(c.cover());
    r.zeta_base = zeta_gog_two_term(c.quotient);

    std::size_t dim_sq = 0;
    for (const auto& rho : irreps) {
        if (&rho.group() != c.action.get()) throw InvalidInput("representation is not over the covering group");
        dim_sq += rho.dim() * rho.dim();
    }
    r.dims_ok = dim_sq == order;
    if (!r.dims_ok)
        r.detail += "sum of squared dimensions is " + std::to_string(dim_sq) + ", group order is " +
                    std::to_string(order) + ". ";

    r.orthonormal = true;
    for (std::size_t i = 0; i < irreps.size(); ++i)
        for (std::size_t j = 0; j < irreps.size(); ++j) {
            Complex s(0.0, 0.0);
            for (int g = 0; g < static_cast<int>(order); ++g)
                s += irreps[i].character(g) * std::conj(irreps[j].character(g));
            s /= static_cast<double>(order);
            if (std::abs(s - Complex(i == j ? 1.0 : 0.0, 0.0)) > kDetTol) {
                r.orthonormal = false;
                r.detail += "characters of '" + irreps[i].name() + "' and '" + irreps[j].name() +
                            "' are not orthonormal. ";
            }
        }

    IntPoly product = IntPoly::one();
    bool all_rounded = true;
    for (const auto& rho : irreps) {
        LResult l = l_function_two_term(c, rho, opt);
        if (l.rounded) {
            product = product * l.rounded->pow(static_cast<unsigned>(rho.dim()));
        } else {
            all_rounded = false;
            r.detail += "L-function of '" + rho.name() + "' did not round: " + l.rounding_error + ". ";
        }
        r.l_values.push_back(std::move(l));
    }
    r.product_ok = all_rounded && product == r.zeta_cover;
    if (all_rounded && !r.product_ok) r.detail += "product of L-functions differs from the zeta function of the cover. ";
    r.divisible = divides(r.zeta_base, r.zeta_cover).has_value();
    if (!r.divisible) r.detail += "zeta of the quotient does not divide zeta of the cover. ";
    return r;
}

StructuralReport structural_check(const CoveringData& c, const LOptions& opt) {
    StructuralReport r;
    const IntPoly zx = zeta_gog_two_term(c.quotient);
    const IntPoly zy = zeta_any_graph(c.cover());
    const Representation one = trivial_rep(c.action);
    const Representation reg = regular_rep(c.action);
    const LResult t2 = l_function_two_term(c, one, opt), t3 = l_function_three_term(c, one, opt);
    const LResult r2 = l_function_two_term(c, reg, opt), r3 = l_function_three_term(c, reg, opt);
    r.trivial_ok = t2.rounded && *t2.rounded == zx;
    r.regular_ok = r2.rounded && *r2.rounded == zy;
    r.two_three_agree = t2.rounded && t3.rounded && r2.rounded && r3.rounded && *t2.rounded == *t3.rounded &&
                        *r2.rounded == *r3.rounded;
    r.divisible = divides(zx, zy).has_value();
    return r;
}

}  // namespace ihara
