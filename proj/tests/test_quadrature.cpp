#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

#include <cmath>
#include <complex>

using namespace dunkl;
using Cx = std::complex<double>;

namespace {
double rel(Cx a, Cx b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}
Cx gaussian(double x) { return Cx(std::exp(-x * x), 0.0); }
} // namespace

TEST_CASE("Gaussian half-line moments against the gamma function") {
    // integral_0^inf e^{-x^2} x^{2k} dx = Gamma(k + 1/2) / 2
    for (double kv : {0.0, 0.25, 1.0, 2.5, 4.0}) {
        double R = gaussian_tail_radius(1.0, 0.0, 2 * kv, 0, 1e-15);
        QuadratureResult q = integrate_halfline(gaussian, Cx(2 * kv, 0.0), R);
        double expected = std::tgamma(kv + 0.5) / 2.0;
        CHECK(rel(q.value, expected) < 1e-12);
        CHECK(q.info.rule == "graded-gauss-legendre");
    }
}

TEST_CASE("double-exponential path handles integrable endpoint singularities") {
    for (double kv : {-0.05, -0.2, -0.35, -0.45}) {
        double R = gaussian_tail_radius(1.0, 0.0, 0.0, 0, 1e-15);
        QuadratureResult q = integrate_halfline(gaussian, Cx(2 * kv, 0.0), R);
        double expected = std::tgamma(kv + 0.5) / 2.0;
        CHECK(rel(q.value, expected) < 1e-10);
        CHECK(q.info.rule == "tanh-sinh");
    }
}

TEST_CASE("forcing the rule choice") {
    QuadratureSpec spec;
    spec.endpoint_rule = EndpointRule::TanhSinh;
    double R = gaussian_tail_radius(1.0, 0.0, 2.0, 0, 1e-15);
    QuadratureResult q = integrate_halfline(gaussian, Cx(2.0, 0.0), R, spec);
    CHECK(rel(q.value, std::tgamma(1.5) / 2.0) < 1e-10);
    CHECK(q.info.rule == "tanh-sinh");
}

TEST_CASE("full-line integrals with even and odd integrands") {
    double R = gaussian_tail_radius(1.0, 0.0, 2.0, 2, 1e-15);
    // integral x^2 e^{-x^2} |x|^{2k} dx = Gamma(k + 3/2)
    for (double kv : {0.25, 1.0, 2.5}) {
        auto g = [](double x) { return Cx(x * x * std::exp(-x * x), 0.0); };
        QuadratureResult q = integrate_fullline(g, Cx(2 * kv, 0.0), R);
        CHECK(rel(q.value, std::tgamma(kv + 1.5)) < 1e-12);
    }
    // odd integrands cancel exactly
    auto odd = [](double x) { return Cx(x * std::exp(-x * x), 0.0); };
    QuadratureResult q = integrate_fullline(odd, Cx(2.0, 0.0), R);
    CHECK(std::abs(q.value) < 1e-14);
}

TEST_CASE("complex weight exponents") {
    // two_k = 1 + i: integral_0^inf e^{-x^2} x^{1+i} dx = Gamma(1 + i/2)/2
    double R = gaussian_tail_radius(1.0, 0.0, 1.0, 0, 1e-15);
    QuadratureResult q = integrate_halfline(gaussian, Cx(1.0, 1.0), R);
    // Gamma(1 + i/2) reference value computed with 30-digit arithmetic
    Cx expected(0.801694097069717, -0.199639738164596);
    CHECK(rel(q.value, expected / 2.0) < 1e-10);
}

TEST_CASE("tail radius grows with the polynomial degree and growth rate") {
    double r0 = gaussian_tail_radius(1.0, 0.0, 0.0, 0, 1e-13);
    double r1 = gaussian_tail_radius(1.0, 2.0, 0.0, 0, 1e-13);
    double r2 = gaussian_tail_radius(1.0, 2.0, 6.0, 8, 1e-13);
    CHECK(r0 >= 9.0);
    CHECK(r1 >= r0);
    CHECK(r2 >= r1);
    CHECK_NOTHROW(require_tail_bound(r2, 1.0, 2.0, 6.0, 8, 1e-13));
    CHECK_THROWS_AS(require_tail_bound(2.0, 1.0, 2.0, 6.0, 8, 1e-13), TailBoundError);
}

TEST_CASE("tolerance self-consistency") {
    auto g = [](double x) { return Cx(std::cos(x) * std::exp(-x * x), 0.0); };
    QuadratureSpec loose;
    loose.rel_tol = 1e-8;
    loose.abs_tol = 1e-10;
    QuadratureSpec tight;
    double R = gaussian_tail_radius(1.0, 1.0, 1.0, 0, 1e-15);
    Cx a = integrate_halfline(g, Cx(0.5, 0.0), R, loose).value;
    Cx b = integrate_halfline(g, Cx(0.5, 0.0), R, tight).value;
    CHECK(rel(a, b) < 1e-7);
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(integrate_halfline(gaussian, Cx(-1.0, 0.0), 9.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_halfline(gaussian, Cx(0.5, 0.0), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_tail_radius(0.0, 1.0, 0.0, 0, 1e-13), std::invalid_argument);
}
