#include "ihara/ihara.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/report.hpp"
#include "core/zeta.hpp"

using namespace ihara;

struct ihara_graph {
    Graph graph;
};
struct ihara_gog {
    GraphOfGroups gog;
};
struct ihara_covering {
    CoveringData data;
};
struct ihara_rep {
    Representation rep;
};

namespace {

thread_local std::string last_error;

ihara_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::dimension: return IHARA_DIMENSION;
        case ErrorKind::invalid_input: return IHARA_INVALID_INPUT;
        case ErrorKind::parse: return IHARA_PARSE;
        case ErrorKind::not_edge_free: return IHARA_NOT_EDGE_FREE;
        case ErrorKind::not_invertible: return IHARA_NOT_INVERTIBLE;
        case ErrorKind::division_by_zero: return IHARA_DIVISION_BY_ZERO;
        case ErrorKind::rounding: return IHARA_ROUNDING;
        case ErrorKind::enumeration_guard: return IHARA_GUARD;
        case ErrorKind::verification: return IHARA_VERIFICATION;
    }
    return IHARA_INTERNAL;
}

ihara_status fail(ihara_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

template <class F>
ihara_status guarded(F&& f) {
    try {
        last_error.clear();
        f();
        return IHARA_OK;
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(IHARA_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(IHARA_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(IHARA_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

ReportOptions report_options(const ihara_options* opt) {
    ReportOptions r;
    if (opt) {
        r.euler_order = opt->euler_order;
        if (opt->max_len) r.max_len = opt->max_len;
        r.allow_big = opt->allow_big != 0;
    }
    return r;
}

void emit(const Report& r, const ihara_options* opt, char** out, int* verified) {
    *out = dup(opt && opt->json ? r.json.dump(2) + "\n" : r.text);
    if (verified) *verified = r.verified ? 1 : 0;
}

}  // namespace

#define IHARA_REQUIRE(cond)                                                     \
    do {                                                                        \
        if (!(cond)) return fail(IHARA_INVALID_ARGUMENT, "null argument: " #cond); \
    } while (0)

extern "C" {

const char* ihara_version(void) { return "0.1.0"; }

const char* ihara_status_name(ihara_status status) {
    switch (status) {
        case IHARA_OK: return "ok";
        case IHARA_INVALID_ARGUMENT: return "invalid argument";
        case IHARA_PARSE: return "parse error";
        case IHARA_INVALID_INPUT: return "invalid input";
        case IHARA_DIMENSION: return "dimension mismatch";
        case IHARA_NOT_EDGE_FREE: return "action not edge-free";
        case IHARA_NOT_INVERTIBLE: return "not invertible";
        case IHARA_DIVISION_BY_ZERO: return "division by zero";
        case IHARA_ROUNDING: return "rounding failed";
        case IHARA_GUARD: return "enumeration guard";
        case IHARA_VERIFICATION: return "verification failed";
        case IHARA_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ihara_last_error(void) { return last_error.c_str(); }

void ihara_string_free(char* s) { std::free(s); }

void ihara_options_init(ihara_options* opt) {
    if (!opt) return;
    opt->json = 0;
    opt->euler_order = 0;
    opt->max_len = 6;
    opt->allow_big = 0;
}

ihara_status ihara_graph_from_json(const char* text, ihara_graph** out) {
    IHARA_REQUIRE(text && out);
    return guarded([&] {
        *out = new ihara_graph{Graph::from_description(io::parse_graph(io::parse_text(text, "graph")))};
    });
}

ihara_status ihara_graph_to_json(const ihara_graph* g, char** out) {
    IHARA_REQUIRE(g && out);
    return guarded([&] { *out = dup(io::to_json(g->graph.description()).dump(2) + "\n"); });
}

void ihara_graph_free(ihara_graph* g) { delete g; }

ihara_status ihara_graph_zeta(const ihara_graph* g, char** out) {
    IHARA_REQUIRE(g && out);
    return guarded([&] { *out = dup(to_compact_string(zeta_any_graph(g->graph))); });
}

ihara_status ihara_graph_zeta_report(const ihara_graph* g, const ihara_options* opt, char** out, int* verified) {
    IHARA_REQUIRE(g && out);
    return guarded([&] { emit(zeta_report(g->graph, report_options(opt)), opt, out, verified); });
}

ihara_status ihara_gog_from_json(const char* text, ihara_gog** out) {
    IHARA_REQUIRE(text && out);
    return guarded([&] { *out = new ihara_gog{io::parse_gog(io::parse_text(text, "graph of groups"))}; });
}

ihara_status ihara_gog_to_json(const ihara_gog* x, char** out) {
    IHARA_REQUIRE(x && out);
    return guarded([&] { *out = dup(io::to_json(x->gog).dump(2) + "\n"); });
}

void ihara_gog_free(ihara_gog* x) { delete x; }

ihara_status ihara_gog_zeta(const ihara_gog* x, char** out) {
    IHARA_REQUIRE(x && out);
    return guarded([&] { *out = dup(to_compact_string(zeta_gog_two_term(x->gog))); });
}

ihara_status ihara_gog_zeta_report(const ihara_gog* x, const ihara_options* opt, char** out, int* verified) {
    IHARA_REQUIRE(x && out);
    return guarded([&] { emit(zeta_gog_report(x->gog, report_options(opt)), opt, out, verified); });
}

ihara_status ihara_quotient(const ihara_graph* g, const char* action_json, const char* tree_seed,
                            uint64_t choice_seed, ihara_covering** out) {
    IHARA_REQUIRE(g && action_json && out);
    return guarded([&] {
        auto action = io::parse_action(g->graph, io::parse_text(action_json, "action"));
        const ActionClass cls = classify_action(*action);
        if (cls == ActionClass::not_edge_free)
            throw NotEdgeFree("the action is not edge-free: some nontrivial element fixes a half-edge");
        CoveringOptions opt;
        opt.choice_seed = choice_seed;
        if (tree_seed) {
            const QuotientGraph q = quotient_graph(*action);
            auto v = q.graph.find_vertex(tree_seed);
            if (!v) throw InvalidInput(std::string("tree seed '") + tree_seed + "' is not a vertex of the quotient");
            opt.tree_seed = *v;
        }
        *out = new ihara_covering{build_covering(std::move(action), opt)};
    });
}

ihara_status ihara_covering_from_json(const char* text, ihara_covering** out) {
    IHARA_REQUIRE(text && out);
    return guarded([&] { *out = new ihara_covering{io::parse_covering(io::parse_text(text, "covering"))}; });
}

ihara_status ihara_covering_to_json(const ihara_covering* c, char** out) {
    IHARA_REQUIRE(c && out);
    return guarded([&] { *out = dup(io::to_json(c->data).dump(2) + "\n"); });
}

void ihara_covering_free(ihara_covering* c) { delete c; }

ihara_status ihara_covering_gog(const ihara_covering* c, ihara_gog** out) {
    IHARA_REQUIRE(c && out);
    return guarded([&] { *out = new ihara_gog{c->data.quotient}; });
}

ihara_status ihara_quotient_report(const ihara_covering* c, const ihara_options* opt, char** out, int* verified) {
    IHARA_REQUIRE(c && out);
    return guarded([&] { emit(quotient_report(c->data, report_options(opt)), opt, out, verified); });
}

ihara_status ihara_split_report(const ihara_covering* c, const ihara_options* opt, char** out, int* verified) {
    IHARA_REQUIRE(c && out);
    return guarded([&] { emit(split_report(c->data, report_options(opt)), opt, out, verified); });
}

ihara_status ihara_rep_from_json(const ihara_covering* c, const char* text, ihara_rep** out) {
    IHARA_REQUIRE(c && text && out);
    return guarded([&] {
        *out = new ihara_rep{io::parse_representation(c->data.action, io::parse_text(text, "representation"))};
    });
}

ihara_status ihara_rep_trivial(const ihara_covering* c, ihara_rep** out) {
    IHARA_REQUIRE(c && out);
    return guarded([&] { *out = new ihara_rep{trivial_rep(c->data.action)}; });
}

ihara_status ihara_rep_regular(const ihara_covering* c, ihara_rep** out) {
    IHARA_REQUIRE(c && out);
    return guarded([&] { *out = new ihara_rep{regular_rep(c->data.action)}; });
}

void ihara_rep_free(ihara_rep* r) { delete r; }

ihara_status ihara_lfunction(const ihara_covering* c, const ihara_rep* r, char** out) {
    IHARA_REQUIRE(c && r && out);
    if (r->rep.group_ptr() != c->data.action)
        return fail(IHARA_INVALID_ARGUMENT, "representation belongs to a different covering");
    return guarded([&] {
        const LResult l = l_function_two_term(c->data, r->rep);
        if (!l.rounded) throw RoundingError(l.rounding_error, 0, l.residual);
        *out = dup(to_compact_string(*l.rounded));
    });
}

ihara_status ihara_lfunction_report(const ihara_covering* c, const ihara_rep* r, const ihara_options* opt,
                                    char** out, int* verified) {
    IHARA_REQUIRE(c && r && out);
    if (r->rep.group_ptr() != c->data.action)
        return fail(IHARA_INVALID_ARGUMENT, "representation belongs to a different covering");
    return guarded([&] { emit(lfunction_report(c->data, r->rep, report_options(opt)), opt, out, verified); });
}

ihara_status ihara_factorize_report(const ihara_covering* c, const ihara_rep* const* irreps, size_t count,
                                    const ihara_options* opt, char** out, int* verified) {
    IHARA_REQUIRE(c && out && (irreps || count == 0));
    std::vector<Representation> reps;
    for (size_t i = 0; i < count; ++i) {
        IHARA_REQUIRE(irreps[i]);
        if (irreps[i]->rep.group_ptr() != c->data.action)
            return fail(IHARA_INVALID_ARGUMENT, "representation belongs to a different covering");
        reps.push_back(irreps[i]->rep);
    }
    return guarded([&] { emit(factorize_report(c->data, reps), opt, out, verified); });
}

ihara_status ihara_factor_poly(const char* poly, char** out) {
    IHARA_REQUIRE(poly && out);
    return guarded([&] { *out = dup(factor_known(parse_int_poly(poly)).render()); });
}

}  // extern "C"
