#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

#include "boole/identity.hpp"
#include "boole/rational.hpp"

namespace boole {

using Json = nlohmann::ordered_json;

/// Top-level parameters echoed into a verification report.
struct ReportParams {
    Rational a;
    Rational b;
    unsigned n_max = 0;
    std::uint64_t seed = 0;
};

/**
 * JSON form of a report:
 *
 *   {"command", "params": {"a", "b", "n_max", "seed"},
 *    "cases": [{"n", "m", "a", "b", "lhs", "rhs", "pass"}],
 *    "checks": [{"kind", "n", "index", "a", "b", "lhs", "rhs", "pass"}],
 *    "notes": [str],
 *    "summary": {"total", "failures", "checks", "check_failures"}}
 *
 * Every rational is canonical "p/q", integers as "p/1".
 */
inline Json report_to_json(const std::string& command, const ReportParams& params, const VerificationReport& report) {
    Json doc;
    doc["command"] = command;
    doc["params"] = {{"a", to_string(params.a)}, {"b", to_string(params.b)}, {"n_max", params.n_max}, {"seed", params.seed}};
    Json cases = Json::array();
    for (const auto& r : report.results()) {
        cases.push_back({{"n", r.input.n},
                         {"m", r.input.m},
                         {"a", to_string(r.input.a)},
                         {"b", to_string(r.input.b)},
                         {"lhs", to_string(r.lhs)},
                         {"rhs", to_string(r.rhs)},
                         {"pass", r.pass}});
    }
    doc["cases"] = std::move(cases);
    Json checks = Json::array();
    for (const auto& c : report.checks()) {
        checks.push_back({{"kind", c.kind},
                          {"n", c.n},
                          {"index", c.index},
                          {"a", to_string(c.a)},
                          {"b", to_string(c.b)},
                          {"lhs", to_string(c.lhs)},
                          {"rhs", to_string(c.rhs)},
                          {"pass", c.pass}});
    }
    doc["checks"] = std::move(checks);
    doc["notes"] = report.notes();
    doc["summary"] = {{"total", report.total()},
                      {"failures", report.failures()},
                      {"checks", report.checks().size()},
                      {"check_failures", report.check_failures()}};
    return doc;
}

/// Cases only, header `n,m,a,b,lhs,rhs,pass`.
inline std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "n,m,a,b,lhs,rhs,pass\n";
    for (const auto& r : report.results()) {
        os << r.input.n << ',' << r.input.m << ',' << to_string(r.input.a) << ',' << to_string(r.input.b) << ','
           << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << (r.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

inline std::string report_to_text(const std::string& command, const ReportParams& params, const VerificationReport& report) {
    std::ostringstream os;
    os << command << ": a=" << params.a << " b=" << params.b << " n_max=" << params.n_max << " seed=" << params.seed
       << '\n';
    for (const auto& r : report.results()) {
        os << "  n=" << r.input.n << " m=" << r.input.m << " a=" << r.input.a << " b=" << r.input.b << "  " << r.lhs
           << (r.pass ? " == " : " != ") << r.rhs << (r.pass ? "" : "  FAIL") << '\n';
    }
    for (const auto& c : report.checks()) {
        if (!c.pass) {
            os << "  check " << c.kind << " n=" << c.n << " index=" << c.index << ": " << c.lhs << " != " << c.rhs
               << "  FAIL\n";
        }
    }
    for (const auto& note : report.notes()) os << "  note: " << note << '\n';
    os << "cases: " << report.total() << " total, " << report.failures() << " failed\n";
    os << "checks: " << report.checks().size() << " total, " << report.check_failures() << " failed\n";
    return os.str();
}

}  // namespace boole
