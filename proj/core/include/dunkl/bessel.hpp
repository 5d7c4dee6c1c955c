#pragma once

#include "dunkl/rational.hpp"

#include <complex>
#include <vector>

namespace dunkl {

using Complex = std::complex<double>;

// Stopping policy for the eigenfunction power series: summation ends only
// after guard_terms consecutive terms fall below rel_tol times the partial
// sum AND the term index exceeds |t|^2.
struct SeriesEvalSpec {
    int max_terms = 500;
    double rel_tol = 1e-15;
    int guard_terms = 3;
};

struct SeriesEval {
    Complex f;   // f(t, k)
    Complex df;  // d/dt
    Complex ddf; // d^2/dt^2
    int terms_used = 0;
};

// Throws SingularParameterError when k is within tol of -1/2 - n, n >= 0.
void require_regular_k(Complex k, double tol = 1e-8);

/**
 * The normalized even series
 *   f(t, k) = sum_{m>=0} t^{2m} / (m! (k+1/2)(k+3/2)...(k-1/2+m)),
 * f(0) = 1, together with its first two t-derivatives, summed termwise.
 */
SeriesEval bessel_series(Complex t, Complex k, const SeriesEvalSpec& spec = {});

struct PhiEval {
    Complex value;
    int terms_used = 0;
};

// Even eigenfunction phi_lambda(x) = f(lambda x, k): D^2 phi = 4 lambda^2 phi.
PhiEval phi_eval(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec = {});
Complex phi(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec = {});

// d/dx of phi_lambda at x.
Complex phi_deriv(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec = {});

// Full eigenfunction psi_lambda = phi_lambda + phi_lambda' / (2 lambda),
// D psi = 2 lambda psi; psi_0 is normalized to the constant 1.
PhiEval psi_eval(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec = {});
Complex psi(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec = {});

// |D psi_lambda(x) - 2 lambda psi_lambda(x)| with D applied analytically
// through the parity decomposition; x must be nonzero.
double dunkl_residual_psi(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec = {});

// |L phi_lambda(x) - 4 lambda^2 phi_lambda(x)|, L = (d/dx)^2 + (2k/x) d/dx.
double l_residual_phi(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec = {});

// Same eigenvalue equation routed through the conjugated operator
// H = (d/dx)^2 + k(1-k)/x^2 applied to u = x^k phi by finite differences:
// returns |H u - 4 lambda^2 u| / max(|u|, eps). Real x > 0, real k.
double l_residual_phi_conjugated(double x, Complex lambda, double k,
                                 const SeriesEvalSpec& spec = {});

// Relative defect of the coupling-shift identity
// (1/x) d/dx phi(x, k) = (4 lambda^2 / (1 + 2k)) phi(x, k+1).
double shift_check(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec = {});

/**
 * Degree-2n polynomial truncation of the series at k = -n - 1/2:
 *   f_n(t) = sum_{m=0}^{n} (-1)^{n-m} (n-m)!/m! t^{2m},
 * built by the first-order recursion seeded with f_n(0) = (-1)^n n! and
 * cross-checked against the closed form; g_n = f_n + f_n'/2.
 */
struct TruncatedBessel {
    unsigned n = 0;
    std::vector<Rational> f_coeffs; // size 2n+1, odd entries zero
    std::vector<Rational> g_coeffs; // size 2n+1
};

TruncatedBessel truncated_bessel(unsigned n);

} // namespace dunkl
