#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "susp/analyzer.hpp"

namespace susp {

enum class ReportFormat { Json, Text };

namespace detail {

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

inline std::string yes_no(const std::optional<bool>& v) {
    if (!v) return "unknown";
    return *v ? "yes" : "no";
}

}  // namespace detail

/// Report as JSON with a fixed key order. Unknown fields are null.
inline nlohmann::ordered_json report_to_json(const Report& r) {
    r.validate();
    nlohmann::ordered_json j;
    j["kind"] = r.kind;
    j["dim"] = r.dim;
    j["smooth"] = detail::optional_json(r.smooth);
    j["homogeneous_variety"] = detail::optional_json(r.homogeneous_variety);
    j["picard_rank"] = detail::optional_json(r.picard_rank);
    j["homogeneous_space"] = detail::optional_json(r.homogeneous_space);
    if (r.label) j["label"] = *r.label;
    if (r.first_failing_level) j["first_failing_level"] = *r.first_failing_level;
    auto& reasons = j["reasons"] = nlohmann::ordered_json::array();
    for (const auto& reason : r.reasons) {
        nlohmann::ordered_json e;
        e["field"] = reason.field;
        e["rule"] = rule_id(reason.rule);
        e["detail"] = reason.detail;
        reasons.push_back(std::move(e));
    }
    j["assumptions"] = r.assumptions;
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    if (r.oracle) {
        nlohmann::ordered_json o;
        o["primes"] = r.oracle->primes;
        o["audited"] = r.oracle->audited;
        o["skipped"] = r.oracle->skipped;
        o["consistent"] = r.oracle->consistent;
        j["oracle"] = std::move(o);
    }
    return j;
}

inline std::string emit_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::Json) return report_to_json(r).dump(2) + "\n";

    r.validate();
    std::ostringstream out;
    out << r.kind << " of dimension " << r.dim << "\n";
    if (r.label) out << "label: " << *r.label << "\n";
    auto field = [&](const char* name, const std::string& value) {
        out << "\n" << name << ": " << value << "\n";
        for (const auto& reason : r.reasons)
            if (reason.field == name) out << "  [" << rule_id(reason.rule) << "] " << reason.detail << "\n";
    };
    field("smooth", detail::yes_no(r.smooth));
    if (r.first_failing_level) out << "  first failing level: " << *r.first_failing_level << "\n";
    field("homogeneous_variety", detail::yes_no(r.homogeneous_variety));
    field("picard_rank", r.picard_rank ? std::to_string(*r.picard_rank) : "unknown");
    field("homogeneous_space", detail::yes_no(r.homogeneous_space));
    if (!r.assumptions.empty()) {
        out << "\nassumptions:\n";
        for (const auto& a : r.assumptions) out << "  " << a << "\n";
    }
    if (!r.checks.empty()) {
        out << "\nchecks:\n";
        for (const auto& c : r.checks) out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
    }
    if (r.oracle) {
        out << "\noracle: " << r.oracle->audited << " verdicts audited, " << r.oracle->skipped << " skipped, "
            << (r.oracle->consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    return out.str();
}

}  // namespace susp
