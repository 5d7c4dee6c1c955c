#include "dunkl/quadrature.hpp"

#include "dunkl/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dunkl {

namespace {

using Complex = std::complex<double>;

constexpr int kGaussOrder = 20;

struct GaussRule {
    std::array<double, kGaussOrder> nodes{};   // on (-1, 1)
    std::array<double, kGaussOrder> weights{};
};

// Nodes and weights by Newton iteration on the Legendre recurrence.
GaussRule build_gauss_rule() {
    using std::numbers::pi;
    GaussRule rule;
    const int n = kGaussOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = build_gauss_rule();
    return rule;
}

double tail_log_envelope(double R, double decay, double growth, double weight_exp,
                         int poly_degree) {
    double power = std::max(weight_exp, 0.0) + std::max(poly_degree, 0);
    return -decay * R * R + growth * R + power * std::log(std::max(R, 1.0));
}

// Graded Gauss-Legendre panels [R/2^{j+1}, R/2^j] plus a final [0, R/2^P].
QuadratureResult graded_gauss(const std::function<Complex(double)>& g, Complex two_k, double R,
                              const QuadratureSpec& spec) {
    const GaussRule& rule = gauss_rule();
    QuadratureResult res;
    res.info.radius = R;
    res.info.panels = spec.panels + 1;
    res.info.rule = "graded-gauss-legendre";
    Complex total(0.0, 0.0);
    double hi = R;
    for (int p = 0; p <= spec.panels; ++p) {
        double lo = (p == spec.panels) ? 0.0 : hi * 0.5;
        double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
        Complex panel(0.0, 0.0);
        for (int i = 0; i < kGaussOrder; ++i) {
            double x = mid + half * rule.nodes[i];
            panel += rule.weights[i] * g(x) * std::pow(x, two_k);
        }
        total += panel * half;
        res.info.evaluations += kGaussOrder;
        hi = lo;
    }
    res.value = total;
    return res;
}

// Double-exponential rule on (0, R]: x = R w(u), w = 1/(1 + e^{-pi sinh u}),
// with the x^{two_k} weight folded in through logs so nodes near 0 stay finite.
QuadratureResult tanh_sinh(const std::function<Complex(double)>& g, Complex two_k, double R,
                           const QuadratureSpec& spec) {
    using std::numbers::pi;
    const double u_max = 6.5;
    QuadratureResult res;
    res.info.radius = R;
    res.info.rule = "tanh-sinh";

    const double log_r = std::log(R);
    auto node = [&](double u) -> Complex {
        const double z = 0.5 * pi * std::sinh(u);
        const double az = std::abs(z);
        const double logw = z >= 0.0 ? -std::log1p(std::exp(-2.0 * z))
                                     : 2.0 * z - std::log1p(std::exp(2.0 * z));
        const double log_sech2 = 2.0 * (std::log(2.0) - az - std::log1p(std::exp(-2.0 * az)));
        const double log_jac = std::log(0.25 * pi * std::cosh(u));
        const double x = R * std::exp(logw);
        ++res.info.evaluations;
        // x^{two_k} dx collapsed into one exponential so nodes near 0 stay finite
        return g(x) * (R * std::exp(two_k * (logw + log_r) + log_sech2 + log_jac));
    };

    double h = 0.5;
    Complex prev = h * node(0.0);
    for (double u = h; u <= u_max; u += h) prev += h * (node(u) + node(-u));

    for (int level = 1; level < 12; ++level) {
        h *= 0.5;
        Complex fresh(0.0, 0.0);
        for (double u = h; u <= u_max; u += 2.0 * h) fresh += node(u) + node(-u);
        Complex value = 0.5 * prev + h * fresh;
        res.info.panels = level + 1;
        if (level >= 3 &&
            std::abs(value - prev) <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
            res.value = value;
            return res;
        }
        prev = value;
    }
    res.value = prev;
    return res;
}

} // namespace

double gaussian_tail_radius(double decay, double growth, double weight_exp, int poly_degree,
                            double abs_tol, double r_min) {
    if (decay <= 0.0) throw std::invalid_argument("gaussian_tail_radius: decay must be positive");
    const double target = std::log(std::max(abs_tol, 1e-280)) - 4.0; // margin e^{-4}
    double R = std::max(r_min, 1.0);
    for (int i = 0; i < 400 && tail_log_envelope(R, decay, growth, weight_exp, poly_degree) > target;
         ++i)
        R *= 1.05;
    return R;
}

void require_tail_bound(double R, double decay, double growth, double weight_exp, int poly_degree,
                        double abs_tol) {
    double env = tail_log_envelope(R, decay, growth, weight_exp, poly_degree);
    if (env > std::log(std::max(abs_tol, 1e-280))) {
        std::ostringstream os;
        os << "radius " << R << " fails the Gaussian tail bound: envelope exp(" << env
           << ") exceeds " << abs_tol;
        throw TailBoundError(os.str());
    }
}

QuadratureResult integrate_halfline(const std::function<Complex(double)>& g, Complex two_k,
                                    double R, const QuadratureSpec& spec) {
    if (two_k.real() <= -1.0)
        throw std::invalid_argument("integrate_halfline: Re(2k) must exceed -1");
    if (!(R > 0.0)) throw std::invalid_argument("integrate_halfline: radius must be positive");
    EndpointRule rule = spec.endpoint_rule;
    if (rule == EndpointRule::Auto)
        rule = two_k.real() >= 0.0 ? EndpointRule::GradedGaussLegendre : EndpointRule::TanhSinh;
    return rule == EndpointRule::GradedGaussLegendre ? graded_gauss(g, two_k, R, spec)
                                                     : tanh_sinh(g, two_k, R, spec);
}

QuadratureResult integrate_fullline(const std::function<Complex(double)>& g, Complex two_k,
                                    double R, const QuadratureSpec& spec) {
    auto sym = [&g](double x) { return g(x) + g(-x); };
    return integrate_halfline(sym, two_k, R, spec);
}

} // namespace dunkl
