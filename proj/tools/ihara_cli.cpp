// Command-line front end over the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ihara/ihara.h"

namespace {

struct Failure {
    ihara_status status;
    std::string context;
    std::string detail;
};

void check(ihara_status s, const std::string& context) {
    if (s != IHARA_OK) throw Failure{s, context, ihara_last_error()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{IHARA_INVALID_INPUT, "cannot open " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{IHARA_INVALID_INPUT, "cannot write " + path};
}

// Owning wrapper for strings returned by the library.
struct Text {
    char* p = nullptr;
    ~Text() { ihara_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
    ~Handle() { Free(p); }
};
using Graph = Handle<ihara_graph, ihara_graph_free>;
using Gog = Handle<ihara_gog, ihara_gog_free>;
using Covering = Handle<ihara_covering, ihara_covering_free>;
using Rep = Handle<ihara_rep, ihara_rep_free>;

Covering load_covering(const std::string& path) {
    Covering c;
    check(ihara_covering_from_json(slurp(path).c_str(), &c.p), path);
    return c;
}

Rep load_rep(const Covering& c, const std::string& spec) {
    Rep r;
    if (spec == "trivial") {
        check(ihara_rep_trivial(c.p, &r.p), spec);
    } else if (spec == "regular") {
        check(ihara_rep_regular(c.p, &r.p), spec);
    } else {
        check(ihara_rep_from_json(c.p, slurp(spec).c_str(), &r.p), spec);
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ihara zeta and L-functions of graphs and graphs of groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ihara_version()));

    ihara_options opt;
    ihara_options_init(&opt);
    bool json = false, allow_big = false;
    unsigned euler = 0;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--euler", euler, "Check the Euler product through u^N");
    app.add_flag("--allow-big", allow_big, "Lift the enumeration size guard");

    std::string graph_file, gog_file, action_file, covering_file, rep_spec, seed, out_gog, out_covering;
    std::vector<std::string> irrep_files;
    std::uint64_t choice_seed = 0;
    unsigned max_len = 6;

    auto* zeta = app.add_subcommand("zeta", "zeta^-1 of a graph");
    zeta->add_option("graph", graph_file)->required();
    zeta->fallthrough();

    auto* zeta_gog = app.add_subcommand("zeta-gog", "zeta^-1 of a graph of groups by both formulas");
    zeta_gog->add_option("gog", gog_file)->required();
    zeta_gog->fallthrough();

    auto* quotient = app.add_subcommand("quotient", "quotient graph of groups of an edge-free action");
    quotient->add_option("graph", graph_file)->required();
    quotient->add_option("action", action_file)->required();
    quotient->add_option("--seed", seed, "Quotient vertex rooting the spanning tree");
    quotient->add_option("--choice-seed", choice_seed, "Randomize lift and Frobenius choices");
    quotient->add_option("--out-gog", out_gog, "Write the quotient graph of groups");
    quotient->add_option("--out-covering", out_covering, "Write the covering data");
    quotient->fallthrough();

    auto* split = app.add_subcommand("split", "splitting of base primes in a covering");
    split->add_option("covering", covering_file)->required();
    split->add_option("--max-len", max_len, "Longest base prime")->check(CLI::PositiveNumber);
    split->fallthrough();

    auto* lfun = app.add_subcommand("lfunction", "L^-1 of a representation");
    lfun->add_option("covering", covering_file)->required();
    lfun->add_option("rep", rep_spec, "Representation file, or trivial / regular")->required();
    lfun->fallthrough();

    auto* factorize = app.add_subcommand("factorize", "check zeta(Y) against a full set of irreducibles");
    factorize->add_option("covering", covering_file)->required();
    factorize->add_option("irreps", irrep_files, "Representation files")->required();
    factorize->fallthrough();

    CLI11_PARSE(app, argc, argv);
    opt.json = json;
    opt.euler_order = euler;
    opt.allow_big = allow_big;
    opt.max_len = max_len;

    try {
        Text out;
        int verified = 1;
        if (*zeta) {
            Graph g;
            check(ihara_graph_from_json(slurp(graph_file).c_str(), &g.p), graph_file);
            check(ihara_graph_zeta_report(g.p, &opt, &out.p, &verified), graph_file);
        } else if (*zeta_gog) {
            Gog x;
            check(ihara_gog_from_json(slurp(gog_file).c_str(), &x.p), gog_file);
            check(ihara_gog_zeta_report(x.p, &opt, &out.p, &verified), gog_file);
        } else if (*quotient) {
            Graph g;
            check(ihara_graph_from_json(slurp(graph_file).c_str(), &g.p), graph_file);
            Covering c;
            check(ihara_quotient(g.p, slurp(action_file).c_str(), seed.empty() ? nullptr : seed.c_str(), choice_seed,
                                 &c.p),
                  action_file);
            check(ihara_quotient_report(c.p, &opt, &out.p, &verified), action_file);
            if (!out_gog.empty()) {
                Gog x;
                Text t;
                check(ihara_covering_gog(c.p, &x.p), out_gog);
                check(ihara_gog_to_json(x.p, &t.p), out_gog);
                write_file(out_gog, t.str());
            }
            if (!out_covering.empty()) {
                Text t;
                check(ihara_covering_to_json(c.p, &t.p), out_covering);
                write_file(out_covering, t.str());
            }
        } else if (*split) {
            Covering c = load_covering(covering_file);
            check(ihara_split_report(c.p, &opt, &out.p, &verified), covering_file);
        } else if (*lfun) {
            Covering c = load_covering(covering_file);
            Rep r = load_rep(c, rep_spec);
            check(ihara_lfunction_report(c.p, r.p, &opt, &out.p, &verified), rep_spec);
        } else if (*factorize) {
            Covering c = load_covering(covering_file);
            std::vector<Rep> reps;
            std::vector<const ihara_rep*> ptrs;
            for (const auto& f : irrep_files) {
                reps.push_back(load_rep(c, f));
                ptrs.push_back(reps.back().p);
            }
            check(ihara_factorize_report(c.p, ptrs.data(), ptrs.size(), &opt, &out.p, &verified), covering_file);
        }
        std::cout << out.str();
        if (!verified) {
            std::cerr << "verification failed\n";
            return 1;
        }
        return 0;
    } catch (const Failure& f) {
        std::cerr << "error: " << f.context << ": " << ihara_status_name(f.status);
        if (!f.detail.empty()) std::cerr << ": " << f.detail;
        std::cerr << "\n";
        return 2;
    }
}
