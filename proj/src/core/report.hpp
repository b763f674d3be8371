#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "io.hpp"

namespace ihara {

struct ReportOptions {
    std::size_t euler_order = 0;  // 0 skips the Euler product check
    std::size_t max_len = 6;
    bool allow_big = false;
};

/// Text form for people, JSON form for machines. verified is false when any
/// check the report ran came out negative.
struct Report {
    std::string text;
    io::json json;
    bool verified = true;
};

std::string render_matrix(const IntMatrix& m);
io::json factors_to_json(const FactoredPoly& f);

Report zeta_report(const Graph& g, const ReportOptions& opt = {});
Report zeta_gog_report(const GraphOfGroups& x, const ReportOptions& opt = {});
Report quotient_report(const CoveringData& c, const ReportOptions& opt = {});
Report split_report(const CoveringData& c, const ReportOptions& opt = {});
Report lfunction_report(const CoveringData& c, const Representation& rho, const ReportOptions& opt = {});
Report factorize_report(const CoveringData& c, const std::vector<Representation>& irreps);

}  // namespace ihara
