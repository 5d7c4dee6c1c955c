#pragma once

#include <complex>
#include <functional>
#include <string>

namespace dunkl {

enum class EndpointRule {
    Auto,                // graded panels when Re(2k) >= 0, tanh-sinh otherwise
    GradedGaussLegendre, // geometrically graded Gauss-Legendre panels toward 0
    TanhSinh,            // double-exponential rule on (0, R]
};

struct QuadratureSpec {
    double radius = 0.0; // 0 => choose from the Gaussian tail bound
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    EndpointRule endpoint_rule = EndpointRule::Auto;
    int panels = 48; // geometric grading depth for the Gauss-Legendre path
};

struct QuadratureInfo {
    double radius = 0.0;
    int panels = 0;
    std::string rule;
    long evaluations = 0;
};

struct QuadratureResult {
    std::complex<double> value;
    QuadratureInfo info;
};

/**
 * Smallest R >= r_min such that the Gaussian tail envelope
 *   exp(-decay R^2 + growth R) * R^{max(weight_exp,0) + poly_degree}
 * falls below abs_tol with a safety margin. decay > 0 is required.
 */
double gaussian_tail_radius(double decay, double growth, double weight_exp, int poly_degree,
                            double abs_tol, double r_min = 9.0);

// Throws TailBoundError if the envelope at R exceeds abs_tol.
void require_tail_bound(double R, double decay, double growth, double weight_exp, int poly_degree,
                        double abs_tol);

/**
 * integral over (0, R] of g(x) x^{two_k} dx for g continuous on [0, R] and
 * Re(two_k) > -1. The weight power is applied by the rule, not by g.
 */
QuadratureResult integrate_halfline(const std::function<std::complex<double>(double)>& g,
                                    std::complex<double> two_k, double R,
                                    const QuadratureSpec& spec = {});

// integral over [-R, R] of g(x) |x|^{two_k} dx via even symmetrization.
QuadratureResult integrate_fullline(const std::function<std::complex<double>(double)>& g,
                                    std::complex<double> two_k, double R,
                                    const QuadratureSpec& spec = {});

} // namespace dunkl
