#pragma once

#include "dunkl/algebra.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/polynomial.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

namespace dunkl {

/**
 * Coupling parameter for the polynomial representation, in one of the three
 * scalar modes. In formal mode k is the generator of Q[k]; in the other two
 * it is a fixed rational or complex value.
 */
template <class S>
struct DunklContext {
    S k;
};

inline DunklContext<KPolynomial> formal_context() { return {KPolynomial::k()}; }
inline DunklContext<Rational> exact_context(Rational k) { return {std::move(k)}; }
inline DunklContext<std::complex<double>> numeric_context(std::complex<double> k) { return {k}; }

// Numeric mode only: reject k within tol of a pole -1/2 - n, 0 <= n <= degmax,
// of the eigenfunction normalization, instead of propagating huge values.
inline void require_regular_numeric_k(std::complex<double> k, int degmax, double tol = 1e-8) {
    for (int n = 0; n <= degmax; ++n) {
        std::complex<double> pole(-0.5 - n, 0.0);
        if (std::abs(k - pole) < tol) {
            std::ostringstream os;
            os << "numeric coupling k = " << k.real() << (k.imag() < 0 ? " - " : " + ")
               << std::abs(k.imag()) << "i is within " << tol << " of the pole " << pole.real();
            throw SingularParameterError(os.str());
        }
    }
}

template <class S>
void guard_numeric(const DunklContext<S>& ctx, int degmax) {
    if constexpr (std::is_same_v<S, std::complex<double>>)
        require_regular_numeric_k(ctx.k, degmax < 0 ? 0 : degmax);
}

// Coefficient of x^{l-1} in D(x^l): l + (1 - (-1)^l) k.
template <class S>
S dunkl_eigencoeff(unsigned long l, const DunklContext<S>& ctx) {
    S c = ScalarTraits<S>::from_long(static_cast<long>(l));
    if (l % 2 == 1) c = c + ctx.k + ctx.k;
    return c;
}

// p(-x)
template <class S>
Polynomial<S> reflect(const Polynomial<S>& p) {
    return p.reflected();
}

/**
 * Dunkl operator D = d/dx - (k/x)(s - 1), which on monomials reads
 * D(x^l) = (l + (1 - (-1)^l) k) x^{l-1}; degree-lowering on polynomials.
 */
template <class S>
Polynomial<S> dunkl_apply(const Polynomial<S>& p, const DunklContext<S>& ctx) {
    guard_numeric(ctx, p.degree());
    if (p.degree() <= 0) return {};
    std::vector<S> out(p.degree(), ScalarTraits<S>::from_long(0));
    for (unsigned long l = 1; l <= static_cast<unsigned long>(p.degree()); ++l)
        out[l - 1] = p.coeff(l) * dunkl_eigencoeff(l, ctx);
    return Polynomial<S>(std::move(out));
}

// Maps a Q[k] coefficient into the scalar mode of the context.
template <class S>
S scalar_from_kpoly(const KPolynomial& c, const DunklContext<S>& ctx) {
    if constexpr (std::is_same_v<S, KPolynomial>)
        return c;
    else if constexpr (std::is_same_v<S, Rational>)
        return c.evaluate(ctx.k);
    else
        return c.evaluate(ctx.k);
}

/**
 * Action of a normal-form algebra element through x -> multiplication,
 * d -> Dunkl operator, s -> reflection.
 */
template <class S>
Polynomial<S> act(const AlgebraElement& a, const Polynomial<S>& p, const DunklContext<S>& ctx) {
    guard_numeric(ctx, p.degree() + static_cast<int>(a.max_x_degree()) + static_cast<int>(a.max_d_degree()));
    Polynomial<S> out;
    for (const auto& [mono, c] : a.terms()) {
        Polynomial<S> q = mono.eps ? p.reflected() : p;
        for (unsigned i = 0; i < mono.n && !q.is_zero(); ++i) q = dunkl_apply(q, ctx);
        if (q.is_zero()) continue;
        q = q.times_x(mono.m);
        q *= scalar_from_kpoly(c, ctx);
        out += q;
    }
    return out;
}

/**
 * Basis of ker D on polynomials of degree <= degmax. Generic k: {1}. When
 * k = -(2n+1)/2 with 2n+1 <= degmax the kernel picks up x^{2n+1} as well.
 * Exact modes only.
 */
template <class S>
std::vector<Polynomial<S>> dunkl_kernel_basis(const DunklContext<S>& ctx, unsigned degmax) {
    static_assert(ScalarTraits<S>::exact, "kernel basis requires an exact scalar mode");
    std::vector<Polynomial<S>> basis;
    basis.push_back(Polynomial<S>::one());
    for (unsigned long l = 1; l <= degmax; ++l)
        if (ScalarTraits<S>::is_zero(dunkl_eigencoeff(l, ctx))) basis.push_back(Polynomial<S>::monomial(l));
    return basis;
}

/**
 * exp(sign * D^2/4) as a degree-lowering (hence finite) sum on a polynomial:
 * sum_m (sign/4)^m D^{2m} p / m!.
 */
template <class S>
Polynomial<S> exp_half_d_squared(const Polynomial<S>& p, const DunklContext<S>& ctx, int sign = 1) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("exp_half_d_squared: sign must be +1 or -1");
    guard_numeric(ctx, p.degree());
    Polynomial<S> out = p;
    Polynomial<S> term = p;
    Rational quarter = make_rational(sign, 4);
    Rational scale(1);
    for (unsigned long m = 1; !term.is_zero(); ++m) {
        term = dunkl_apply(dunkl_apply(term, ctx), ctx);
        scale *= quarter / Rational(static_cast<long>(m));
        if (term.is_zero()) break;
        Polynomial<S> scaled = term;
        if constexpr (std::is_same_v<S, std::complex<double>>)
            scaled *= std::complex<double>(scale.get_d(), 0.0);
        else if constexpr (std::is_same_v<S, Rational>)
            scaled *= scale;
        else
            scaled *= KPolynomial(scale);
        out += scaled;
    }
    return out;
}

/**
 * Membership test for the ideal-submodule x^{2n+1} C[x] inside the polynomial
 * module at k = -(2n+1)/2: the first 2n+1 coefficients vanish. Exact modes.
 */
template <class S>
bool submodule_membership(const Polynomial<S>& p, unsigned n) {
    static_assert(ScalarTraits<S>::exact, "membership requires an exact scalar mode");
    for (unsigned i = 0; i < 2 * n + 1; ++i)
        if (!ScalarTraits<S>::is_zero(p.coeff(i))) return false;
    return true;
}

} // namespace dunkl
