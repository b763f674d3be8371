#include "report.hpp"

#include <cstdio>
#include <sstream>

#include "zeta.hpp"

namespace ihara {

namespace {

int structural_exponent(long betti, std::size_t dim = 1) {
    const long e = (betti - 1) * static_cast<long>(dim);
    return e > 0 ? static_cast<int>(e) : 0;
}

io::json matrix_to_json(const IntMatrix& m) {
    io::json rows = io::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        io::json row = io::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void add_euler(Report& r, std::ostringstream& text, const EulerReport& e) {
    text << "euler product through u^" << e.order << ": " << (e.ok ? "ok" : "MISMATCH") << " (" << e.primes
         << " primes";
    if (!e.ok) text << ", first difference at u^" << e.first_mismatch;
    text << ")\n";
    r.json["euler_check"] = {{"order", e.order}, {"ok", e.ok}, {"primes", e.primes}};
    r.verified = r.verified && e.ok;
}

void add_zeta_lines(Report& r, std::ostringstream& text, const IntPoly& z, long betti) {
    const FactoredPoly f = factor_known(z, structural_exponent(betti));
    text << f.render() << "\n";
    text << "expanded: " << to_string(z) << "\n";
    r.json["zeta_inv"] = io::poly_to_json(z);
    r.json["factors"] = factors_to_json(f);
}

std::string render_l(const LResult& l, long betti, std::size_t dim) {
    if (!l.rounded) return "not integral: " + l.rounding_error;
    return factor_known(*l.rounded, structural_exponent(betti, dim)).render();
}

io::json l_to_json(const LResult& l, long betti, std::size_t dim) {
    io::json j{{"residual", l.residual}, {"exact", l.exact}, {"raw", io::complex_poly_to_json(l.raw)}};
    if (l.rounded) {
        j["l_inv"] = io::poly_to_json(*l.rounded);
        j["factors"] = factors_to_json(factor_known(*l.rounded, structural_exponent(betti, dim)));
    } else {
        j["error"] = l.rounding_error;
    }
    return j;
}

}  // namespace

std::string render_matrix(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

io::json factors_to_json(const FactoredPoly& f) {
    io::json out = io::json::array();
    for (const auto& [p, e] : f.factors) out.push_back({to_compact_string(p), e});
    return out;
}

Report zeta_report(const Graph& g, const ReportOptions& opt) {
    Report r;
    std::ostringstream text;
    const IntPoly z = zeta_any_graph(g);
    add_zeta_lines(r, text, z, g.betti());
    if (opt.euler_order) add_euler(r, text, verify_euler(g, opt.euler_order, opt.allow_big));
    r.text = text.str();
    return r;
}

Report zeta_gog_report(const GraphOfGroups& x, const ReportOptions& opt) {
    Report r;
    std::ostringstream text;
    const IntPoly two = zeta_gog_two_term(x);
    const IntPoly three = zeta_gog_three_term(x);
    add_zeta_lines(r, text, two, x.graph().betti());
    const bool agree = two == three;
    text << "two-term and three-term agree: " << yes_no(agree) << "\n";
    r.json["formulas_agree"] = agree;
    r.verified = agree;
    if (opt.euler_order) add_euler(r, text, verify_euler(x, opt.euler_order, opt.allow_big));
    r.text = text.str();
    return r;
}

Report quotient_report(const CoveringData& c, const ReportOptions& opt) {
    Report r;
    std::ostringstream text;
    const GraphOfGroups& x = c.quotient;
    const Graph& g = x.graph();
    const IntPoly two = zeta_gog_two_term(x);
    const IntPoly three = zeta_gog_three_term(x);
    add_zeta_lines(r, text, two, g.betti());
    const ActionClass cls = classify_action(*c.action);
    const IntMatrix a = adjacency_matrix(g), q = valency_matrix(g), cm = charge_matrix(x);
    text << "action: " << to_string(cls) << ", order " << c.degree() << "\n";
    text << "b1: " << g.betti() << "\n";
    text << "l: " << g.leg_count() << "\n";
    text << "A: " << render_matrix(a) << "\n";
    text << "Q: " << render_matrix(q) << "\n";
    text << "C: " << render_matrix(cm) << "\n";
    const bool agree = two == three;
    text << "two-term and three-term agree: " << yes_no(agree) << "\n";
    r.json["action"] = to_string(cls);
    r.json["order"] = c.degree();
    r.json["vertices"] = g.vertex_labels();
    r.json["b1"] = g.betti();
    r.json["l"] = g.leg_count();
    r.json["A"] = matrix_to_json(a);
    r.json["Q"] = matrix_to_json(q);
    r.json["C"] = matrix_to_json(cm);
    r.json["formulas_agree"] = agree;
    r.verified = agree;
    if (opt.euler_order) add_euler(r, text, verify_euler(x, opt.euler_order, opt.allow_big));
    r.text = text.str();
    return r;
}

Report split_report(const CoveringData& c, const ReportOptions& opt) {
    Report r;
    std::ostringstream text;
    io::json rows = io::json::array();
    for (const PrimeSplitting& s : full_splitting_table(c, opt.max_len, opt.allow_big)) {
        const std::string base = format_gog_path(c.quotient, s.base);
        io::json above = io::json::array();
        text << base << "  f=" << s.residual_degree << " g=" << s.primes_above << ":";
        for (const GraphPrime& p : s.above) {
            const std::string name = cover_prime_name(c, p);
            text << " " << name;
            above.push_back(name);
        }
        text << "\n";
        rows.push_back({{"base", base},
                        {"frobenius", c.action->name(s.frobenius)},
                        {"f", s.residual_degree},
                        {"g", s.primes_above},
                        {"above", above}});
    }
    const PartitionCheck pc = partition_check(c, opt.max_len, opt.allow_big);
    text << "partition of cover primes up to length " << opt.max_len << ": " << (pc.ok ? "ok" : "FAILED") << " ("
         << pc.covered << " of " << pc.cover_primes << ")";
    if (!pc.ok && !pc.detail.empty()) text << " " << pc.detail;
    text << "\n";
    r.json["splittings"] = rows;
    r.json["partition"] = {{"ok", pc.ok}, {"cover_primes", pc.cover_primes}, {"covered", pc.covered}};
    r.verified = pc.ok;
    r.text = text.str();
    return r;
}

Report lfunction_report(const CoveringData& c, const Representation& rho, const ReportOptions& opt) {
    Report r;
    std::ostringstream text;
    const long betti = c.base().betti();
    const LResult two = l_function_two_term(c, rho);
    const LResult three = l_function_three_term(c, rho);
    text << render_l(two, betti, rho.dim()) << "\n";
    if (two.rounded) text << "expanded: " << to_string(*two.rounded) << "\n";
    text << "representation: " << rho.name() << ", dimension " << rho.dim() << "\n";
    text << (two.exact ? "computed exactly (integral representation)\n"
                       : "rounding residual: " + format_double(two.residual) + "\n");
    const bool agree = two.rounded && three.rounded && *two.rounded == *three.rounded;
    text << "two-term and three-term agree: " << yes_no(agree) << "\n";
    r.json = l_to_json(two, betti, rho.dim());
    r.json["representation"] = rho.name();
    r.json["dim"] = rho.dim();
    r.json["formulas_agree"] = agree;
    r.verified = agree;
    if (opt.euler_order) {
        const LEulerReport e = l_euler_verify(c, rho, opt.euler_order, opt.allow_big);
        text << "euler product through u^" << e.order << ": " << (e.ok ? "ok" : "MISMATCH") << " (" << e.primes
             << " base primes, worst difference " << format_double(e.worst) << ")\n";
        r.json["euler_check"] = {{"order", e.order}, {"ok", e.ok}, {"primes", e.primes}, {"worst", e.worst}};
        r.verified = r.verified && e.ok;
    }
    r.text = text.str();
    return r;
}

Report factorize_report(const CoveringData& c, const std::vector<Representation>& irreps) {
    Report r;
    std::ostringstream text;
    const long betti = c.base().betti();
    const FactorizationReport f = factorization_check(c, irreps);
    text << (f.ok() ? "factorization verified" : "factorization FAILED") << "\n";
    text << "zeta(Y)^-1: " << factor_known(f.zeta_cover, structural_exponent(c.cover().betti())).render() << "\n";
    text << "zeta(X)^-1: " << factor_known(f.zeta_base, structural_exponent(betti)).render() << "\n";
    io::json ls = io::json::array();
    for (std::size_t i = 0; i < irreps.size() && i < f.l_values.size(); ++i) {
        text << "L^-1(" << irreps[i].name() << "), dimension " << irreps[i].dim() << ": "
             << render_l(f.l_values[i], betti, irreps[i].dim()) << "\n";
        io::json j = l_to_json(f.l_values[i], betti, irreps[i].dim());
        j["representation"] = irreps[i].name();
        j["dim"] = irreps[i].dim();
        ls.push_back(j);
    }
    text << "sum of squared dimensions equals group order: " << yes_no(f.dims_ok) << "\n";
    text << "characters orthonormal: " << yes_no(f.orthonormal) << "\n";
    text << "product of L^-1 powers equals zeta(Y)^-1: " << yes_no(f.product_ok) << "\n";
    text << "zeta(X)^-1 divides zeta(Y)^-1: " << yes_no(f.divisible) << "\n";
    if (!f.detail.empty()) text << f.detail << "\n";
    r.json = {{"ok", f.ok()},
              {"dims_ok", f.dims_ok},
              {"orthonormal", f.orthonormal},
              {"product_ok", f.product_ok},
              {"divisible", f.divisible},
              {"zeta_cover", io::poly_to_json(f.zeta_cover)},
              {"zeta_base", io::poly_to_json(f.zeta_base)},
              {"l_functions", ls}};
    r.verified = f.ok();
    r.text = text.str();
    return r;
}

}  // namespace ihara
