#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/bessel.hpp"
#include "dunkl/errors.hpp"

#include <cmath>
#include <complex>

using namespace dunkl;

namespace {
double rel(Complex a, Complex b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}
} // namespace

TEST_CASE("k = 0 collapses to hyperbolic functions") {
    for (double x : {-1.7, -0.4, 0.2, 0.9, 2.0})
        for (double lam : {-1.2, 0.3, 1.8}) {
            Complex k(0.0, 0.0);
            CHECK(rel(phi(x, lam, k), std::cosh(2 * x * lam)) < 1e-14);
            // For 2 x lam < 0 the series cancels down from terms of size
            // e^{2|x lam|}, so the attainable accuracy degrades by e^{4|x lam|}.
            double cancel = std::exp(4.0 * std::abs(x * lam));
            CHECK(rel(psi(x, lam, k), std::exp(2 * x * lam)) < 1e-15 * std::max(cancel, 10.0));
        }
}

TEST_CASE("k = 1/2 matches the order-zero modified Bessel function") {
    for (double t : {0.3, 0.8, 1.5, 2.4}) {
        Complex v = phi(t, 1.0, Complex(0.5, 0.0));
        CHECK(rel(v, std::cyl_bessel_i(0.0, 2 * t)) < 1e-13);
    }
}

TEST_CASE("k = 1 matches sinh(2t)/(2t)") {
    for (double t : {0.25, 0.7, 1.3, 2.2}) {
        Complex v = phi(t, 1.0, Complex(1.0, 0.0));
        CHECK(rel(v, std::sinh(2 * t) / (2 * t)) < 1e-14);
    }
}

TEST_CASE("value at the origin and at lambda = 0") {
    CHECK(rel(phi(0.0, 1.3, Complex(0.7, 0.0)), 1.0) == 0.0);
    CHECK(rel(psi(1.1, 0.0, Complex(0.7, 0.0)), 1.0) == 0.0);
    CHECK(psi_eval(0.9, 0.0, Complex(0.3, 0.0)).terms_used >= 1);
}

TEST_CASE("derivative agrees with central differences") {
    Complex k(1.3, 0.0);
    Complex lam(0.4, 0.0);
    double x = 0.7, h = 1e-5;
    Complex analytic = phi_deriv(x, lam, k);
    Complex fd = (phi(x + h, lam, k) - phi(x - h, lam, k)) / (2 * h);
    CHECK(std::abs(analytic - fd) < 1e-8);
}

TEST_CASE("eigenfunction residuals vanish to near machine precision") {
    SeriesEvalSpec spec;
    CHECK(dunkl_residual_psi(0.9, 0.3, Complex(1.5, 0.0), spec) < 1e-9);
    CHECK(l_residual_phi(0.9, 0.3, Complex(1.5, 0.0), spec) < 1e-9);
    for (double x : {-1.4, 0.6, 1.9})
        for (double lam : {-0.8, 0.5, 1.6})
            for (double kv : {0.25, 1.0, 2.5}) {
                CHECK(dunkl_residual_psi(x, lam, Complex(kv, 0.0), spec) < 1e-9);
                CHECK(l_residual_phi(x, lam, Complex(kv, 0.0), spec) < 1e-9);
            }
}

TEST_CASE("conjugated second-order form agrees by finite differences") {
    // H u = u'' + k(1-k)/x^2 u with u = x^k phi; FD-limited accuracy
    CHECK(l_residual_phi_conjugated(0.8, Complex(0.6, 0.0), 1.2) < 1e-5);
    CHECK(l_residual_phi_conjugated(1.5, Complex(1.1, 0.0), 0.25) < 1e-5);
}

TEST_CASE("coupling-shift identity") {
    CHECK(shift_check(0.6, 0.7, Complex(0.5, 0.0)) < 1e-9);
    for (double x : {-1.1, 0.4, 1.7})
        for (double lam : {0.3, 1.2})
            for (double kv : {0.25, 1.0, 2.5}) CHECK(shift_check(x, lam, Complex(kv, 0.0)) < 1e-9);
}

TEST_CASE("series growth stays inside the exponential envelope") {
    for (double x : {0.3, 1.0, 1.9})
        for (double lam : {0.5, 1.4, 2.0})
            for (double kv : {0.25, 1.0, 2.5}) {
                double bound = std::exp(2 * std::abs(x * lam)) * (1 + 1e-12);
                CHECK(std::abs(phi(x, lam, Complex(kv, 0.0))) <= bound);
                CHECK(std::abs(psi(x, lam, Complex(kv, 0.0))) <= bound);
            }
}

TEST_CASE("summation respects the index floor |t|^2") {
    PhiEval ev = phi_eval(3.0, 1.0, Complex(0.5, 0.0));
    CHECK(ev.terms_used > 9);
}

TEST_CASE("singular couplings are rejected") {
    CHECK_THROWS_AS(require_regular_k(Complex(-0.5, 0.0)), SingularParameterError);
    CHECK_THROWS_AS(require_regular_k(Complex(-1.5 + 1e-12, 0.0)), SingularParameterError);
    CHECK_NOTHROW(require_regular_k(Complex(-0.3, 0.0)));
    CHECK_THROWS_AS(phi(1.0, 1.0, Complex(-2.5, 0.0)), SingularParameterError);
    CHECK_THROWS_AS(psi(1.0, 1.0, Complex(-0.5, 0.0)), SingularParameterError);
}

TEST_CASE("the term budget is enforced") {
    SeriesEvalSpec tiny{5, 1e-15, 3};
    CHECK_THROWS_AS(bessel_series(8.0, Complex(0.5, 0.0), tiny), ConvergenceError);
}

TEST_CASE("polynomial truncations at negative half-integers") {
    TruncatedBessel t1 = truncated_bessel(1);
    REQUIRE(t1.f_coeffs.size() == 3);
    CHECK(t1.f_coeffs[0] == Rational(-1));
    CHECK(t1.f_coeffs[1] == Rational(0));
    CHECK(t1.f_coeffs[2] == Rational(1));
    CHECK(t1.g_coeffs[0] == Rational(-1));
    CHECK(t1.g_coeffs[1] == Rational(1));
    CHECK(t1.g_coeffs[2] == Rational(1));

    // closed form: coefficient of t^{2m} is (-1)^{n-m} (n-m)!/m!
    for (unsigned n = 0; n <= 10; ++n) {
        TruncatedBessel t = truncated_bessel(n);
        REQUIRE(t.f_coeffs.size() == 2 * n + 1);
        for (unsigned m = 0; m <= n; ++m) {
            Rational expected = factorial(n - m) / factorial(m);
            if ((n - m) % 2 == 1) expected = -expected;
            CHECK(t.f_coeffs[2 * m] == expected);
        }
        for (unsigned m = 0; m + 1 <= n; ++m) {
            // g odd part = f'/2
            Rational expected = t.f_coeffs[2 * m + 2] * Rational(static_cast<long>(m) + 1);
            CHECK(t.g_coeffs[2 * m + 1] == expected);
        }
    }
}
