#include "appell/report.hpp"

#include <sstream>

namespace appell {

namespace {

std::string params_inline(const CheckResult& r) {
    std::string out;
    for (const auto& [k, v] : r.params) {
        if (!out.empty()) out += ';';
        out += k + "=" + std::to_string(v);
    }
    return out;
}

std::string label(const CheckResult& r) {
    std::string out = r.check + " " + r.family.name();
    if (r.family.has_r()) out += " r=" + std::to_string(r.family.r);
    for (const auto& [k, v] : r.params) out += " " + k + "=" + std::to_string(v);
    return out;
}

}  // namespace

nlohmann::json to_json(const CheckResult& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["family"] = r.family.name();
    j["r"] = r.family.r;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["t_used"] = r.t_used ? nlohmann::json(r.t_used->get_str()) : nlohmann::json(nullptr);
    j["status"] = r.passed() ? "pass" : "fail";
    if (r.lhs) j["lhs"] = to_decimal_strings(*r.lhs);
    if (r.rhs) j["rhs"] = to_decimal_strings(*r.rhs);
    if (r.input) j["input"] = to_decimal_strings(*r.input);
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

nlohmann::json to_json(const Report& report) {
    nlohmann::json j;
    j["summary"] = {{"total", report.total()}, {"pass", report.passed()}, {"fail", report.failed()},
                    {"seed", report.seed}};
    auto results = nlohmann::json::array();
    for (const auto& r : report.results) results.push_back(to_json(r));
    j["results"] = std::move(results);
    return j;
}

std::string report_json_text(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string report_csv(const Report& report) {
    std::ostringstream os;
    os << "check,family,r,params,t_used,status\n";
    for (const auto& r : report.results) {
        os << r.check << ',' << r.family.name() << ',' << r.family.r << ',' << params_inline(r) << ','
           << (r.t_used ? r.t_used->get_str() : "") << ',' << (r.passed() ? "pass" : "fail") << '\n';
    }
    return os.str();
}

std::string report_text(const Report& report, bool verbose) {
    std::ostringstream os;
    for (const auto& r : report.results) {
        if (verbose || !r.passed()) os << (r.passed() ? "pass  " : "FAIL  ") << label(r) << '\n';
    }
    os << "total " << report.total() << "  pass " << report.passed() << "  fail " << report.failed() << "  seed "
       << report.seed << '\n';
    if (const auto* f = report.first_failure()) {
        os << "counterexample: " << label(*f) << '\n';
        if (f->t_used) os << "  t   = " << f->t_used->get_str() << '\n';
        if (f->input) os << "  in  = " << to_string(*f->input) << '\n';
        if (f->lhs) os << "  lhs = " << to_string(*f->lhs) << '\n';
        if (f->rhs) os << "  rhs = " << to_string(*f->rhs) << '\n';
        if (!f->error.empty()) os << "  error: " << f->error << '\n';
    }
    return os.str();
}

}  // namespace appell
