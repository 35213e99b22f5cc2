#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "appell/grid.hpp"

namespace appell {

// JSON layout:
//   { "summary": {"total", "pass", "fail", "seed"},
//     "results": [ {"check", "family", "r", "params", "t_used",
//                   "status", "lhs"?, "rhs"?, "input"?, "error"?} ] }
// Polynomials are arrays of decimal strings, x^0 first. t_used is the
// signed representative as a string, or null for exact identities. Timings
// are left out so identical grids give byte-identical reports.

nlohmann::json to_json(const CheckResult& result);
nlohmann::json to_json(const Report& report);

/// to_json(report).dump(2) plus a trailing newline.
std::string report_json_text(const Report& report);

/// One row per result, polynomials omitted; params as "k=v;k=v".
std::string report_csv(const Report& report);

/// Summary line, one line per failure (all results when verbose), and the
/// first counterexample in full.
std::string report_text(const Report& report, bool verbose = false);

}  // namespace appell
