#include "dunkl/report.hpp"

#include <json.hpp>

namespace dunkl {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_to_json(const CheckReport& r) {
    ordered_json j;
    j["check_name"] = r.check_name;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.parameters) {
        if (value.imag() == 0.0)
            params[name] = value.real();
        else
            params[name] = {value.real(), value.imag()};
    }
    j["parameters"] = params;
    j["lhs"] = {r.lhs.real(), r.lhs.imag()};
    j["rhs"] = {r.rhs.real(), r.rhs.imag()};
    j["rel_err"] = r.rel_err;
    j["tolerance"] = r.tolerance;
    if (!r.quadrature.rule.empty()) {
        j["quadrature"] = {{"R", r.quadrature.radius},
                           {"panels", r.quadrature.panels},
                           {"rule", r.quadrature.rule}};
    }
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace

std::string to_json(const CheckReport& report) {
    ordered_json j = report_to_json(report);
    j["schema_version"] = kReportSchemaVersion;
    return j.dump(2);
}

std::string to_json(const std::vector<CheckReport>& reports) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    ordered_json checks = ordered_json::array();
    for (const auto& r : reports) checks.push_back(report_to_json(r));
    j["checks"] = checks;
    return j.dump(2);
}

} // namespace dunkl
