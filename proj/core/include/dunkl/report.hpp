#pragma once

#include "dunkl/quadrature.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace dunkl {

inline constexpr int kReportSchemaVersion = 1;

// One verified identity: both sides, the relative error, the tolerance it
// was held to, and the quadrature geometry that produced the numbers.
struct CheckReport {
    std::string check_name;
    std::vector<std::pair<std::string, std::complex<double>>> parameters;
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double rel_err = 0.0;
    double tolerance = 0.0;
    QuadratureInfo quadrature;
    bool pass = false;
    std::string note;
};

// Single-object JSON; every double is emitted with full round-trip precision.
std::string to_json(const CheckReport& report);

// {"schema_version": 1, "checks": [...]}
std::string to_json(const std::vector<CheckReport>& reports);

} // namespace dunkl
