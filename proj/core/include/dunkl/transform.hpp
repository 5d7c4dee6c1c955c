#pragma once

#include "dunkl/bessel.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/report.hpp"

#include <functional>
#include <vector>

namespace dunkl {

using RealFunction = std::function<Complex(double)>;
using ComplexFunction = std::function<Complex(Complex)>;

/**
 * p(z) e^{sign z^2} with a fixed coupling k: the class of integrands closed
 * under the Dunkl operator, multiplication by z, and the transforms below.
 * sign = -1 on the x side, +1 on the spectral side.
 */
struct GaussianPolynomial {
    NumericPolynomial p;
    int gaussian_sign = -1;
    Complex k{0.0, 0.0};

    Complex evaluate(Complex z) const;
    RealFunction as_function() const;
    ComplexFunction as_complex_function() const;
};

GaussianPolynomial gp_add(const GaussianPolynomial& a, const GaussianPolynomial& b);
GaussianPolynomial gp_scale(const GaussianPolynomial& a, Complex c);
GaussianPolynomial gp_mul_x(const GaussianPolynomial& a, unsigned power = 1);
GaussianPolynomial gp_reflect(const GaussianPolynomial& a);
// plain d/dz
GaussianPolynomial gp_derivative(const GaussianPolynomial& a);
// Dunkl operator at the stored coupling
GaussianPolynomial gp_dunkl(const GaussianPolynomial& a);
// L = (d/dz)^2 + (2k/z) d/dz on even elements (equals the square of gp_dunkl)
GaussianPolynomial gp_bessel_op(const GaussianPolynomial& a);

struct TransformResult {
    Complex value;
    QuadratureInfo info;
};

/**
 * Symmetric transform: (2/Gamma(k+1/2)) * integral over (0,inf) of
 * phi_lambda(x) f(x) x^{2k} dx, truncated at a radius passing the Gaussian
 * tail bound. f must be Gaussian-class (|f| <= M e^{-x^2 + c x} poly).
 */
TransformResult hankel_sym(const RealFunction& f, Complex lambda, Complex k,
                           const QuadratureSpec& spec = {});

/**
 * Nonsymmetric transform: (1/Gamma(k+1/2)) * integral over R of
 * psi_lambda(x) f(x) |x|^{2k} dx.
 */
TransformResult hankel_nonsym(const RealFunction& f, Complex lambda, Complex k,
                              const QuadratureSpec& spec = {});

// Exact transform of p(x) e^{-x^2}: e^{lambda^2} (exp(D^2/4) p)(lambda).
GaussianPolynomial hankel_gaussian_oracle(const GaussianPolynomial& f);
// Exact inverse on the spectral side: q(lambda) e^{lambda^2} maps back to
// e^{-x^2} (exp(-D^2/4) q)(x).
GaussianPolynomial hankel_gaussian_oracle_inverse(const GaussianPolynomial& g);

/**
 * Inverse transform from the imaginary axis, parameterized lambda = it:
 * (1/Gamma(k+1/2)) * integral over R of psi_x(-it) g(it) |t|^{2k} dt.
 */
TransformResult hankel_inverse_im(const ComplexFunction& g, double x, Complex k,
                                  const QuadratureSpec& spec = {});

// <f, g>_re = integral over R of f(x) g(x) |x|^{2k} dx (both Gaussian-class).
TransformResult inner_re(const RealFunction& f, const RealFunction& g, Complex k,
                         const QuadratureSpec& spec = {});

// <F, G>_im = integral over R of F(it) G(-it) |t|^{2k} dt.
TransformResult inner_im(const ComplexFunction& F, const ComplexFunction& G, Complex k,
                         const QuadratureSpec& spec = {});

/**
 * Bilinear master identity with Gaussian weight e^{-alpha x^2}:
 *   integral psi_lambda psi_mu e^{-alpha x^2} |x|^{2k} dx
 *     = Gamma(k+1/2) alpha^{-k-1/2} e^{(lambda^2+mu^2)/alpha} psi_lambda(mu/alpha).
 * The alpha power carries the exponent -k-1/2 (fixed by the lambda=mu=0
 * Gaussian moment).
 */
CheckReport master_check(Complex k, Complex lambda, Complex mu, double alpha,
                         const QuadratureSpec& spec = {});

// Even counterpart with phi in place of psi (half-line, doubled).
CheckReport master_check_sym(Complex k, Complex lambda, Complex mu, double alpha,
                             const QuadratureSpec& spec = {});

// The six operator identities under the two transforms, each reported with
// the worst relative error over a fixed grid of test functions and lambdas.
std::vector<CheckReport> operator_transform_check(Complex k, const QuadratureSpec& spec = {});

// Symmetry defects of L (self-adjoint) and D (anti-self-adjoint) in <.,.>_re.
std::vector<CheckReport> adjointness_check(Complex k, const QuadratureSpec& spec = {});

// <f, g>_re = <Ff, Fg>_im for Gaussian-class f, g (transforms taken exactly).
CheckReport plancherel_check(const GaussianPolynomial& f, const GaussianPolynomial& g, Complex k,
                             const QuadratureSpec& spec = {});

// Round trips between the two axes on x^j e^{-x^2}, j <= degmax, with the
// quadrature side composed against the exact oracle on the other side.
std::vector<CheckReport> inversion_check(Complex k, int degmax = 4,
                                         const QuadratureSpec& spec = {});

// Quadrature transform against the exact Gaussian oracle.
std::vector<CheckReport> oracle_agreement_check(Complex k, int degmax = 6,
                                                const QuadratureSpec& spec = {});

// The nonsymmetric transform restricted to even functions matches the
// symmetric one; odd parts reduce to the shifted (k+1) even theory.
std::vector<CheckReport> sym_nonsym_consistency_check(Complex k, const QuadratureSpec& spec = {});

// Squared norm of the Gaussian: <e^{-x^2}, e^{-x^2}>_re = 2^{-k-1/2} Gamma(k+1/2).
CheckReport gaussian_norm_check(Complex k, const QuadratureSpec& spec = {});

} // namespace dunkl
