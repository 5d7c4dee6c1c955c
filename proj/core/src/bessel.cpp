#include "dunkl/bessel.hpp"

#include "dunkl/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dunkl {

void require_regular_k(Complex k, double tol) {
    long n = std::lround(-k.real() - 0.5);
    if (n < 0) return;
    Complex pole(-0.5 - static_cast<double>(n), 0.0);
    if (std::abs(k - pole) < tol) {
        std::ostringstream os;
        os << "coupling k = " << k.real() << (k.imag() < 0 ? " - " : " + ") << std::abs(k.imag())
           << "i is within " << tol << " of the series pole " << pole.real();
        throw SingularParameterError(os.str());
    }
}

SeriesEval bessel_series(Complex t, Complex k, const SeriesEvalSpec& spec) {
    require_regular_k(k);
    const Complex t2 = t * t;
    const double t_abs2 = std::abs(t) * std::abs(t);
    Complex term(1.0, 0.0);
    Complex s0(0.0, 0.0), s1(0.0, 0.0), s2(0.0, 0.0);
    int consecutive = 0;
    for (int m = 0; m < spec.max_terms; ++m) {
        const double dm = static_cast<double>(m);
        s0 += term;
        s1 += 2.0 * dm * term;
        s2 += 2.0 * dm * (2.0 * dm - 1.0) * term;
        if (std::abs(term) < spec.rel_tol * std::abs(s0))
            ++consecutive;
        else
            consecutive = 0;
        if (consecutive >= spec.guard_terms && dm > t_abs2) {
            SeriesEval ev;
            ev.f = s0;
            ev.terms_used = m + 1;
            if (t == Complex(0.0, 0.0)) {
                ev.df = 0.0;
                ev.ddf = 2.0 / (k + 0.5);
            } else {
                ev.df = s1 / t;
                ev.ddf = s2 / t2;
            }
            return ev;
        }
        term = term * t2 / ((dm + 1.0) * (k + (0.5 + dm)));
    }
    std::ostringstream os;
    os << "series did not converge within " << spec.max_terms << " terms at |t| = " << std::abs(t);
    throw ConvergenceError(os.str());
}

PhiEval phi_eval(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec) {
    SeriesEval ev = bessel_series(x * lambda, k, spec);
    return {ev.f, ev.terms_used};
}

Complex phi(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec) {
    return phi_eval(x, lambda, k, spec).value;
}

Complex phi_deriv(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec) {
    SeriesEval ev = bessel_series(x * lambda, k, spec);
    return lambda * ev.df;
}

PhiEval psi_eval(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec) {
    if (lambda == Complex(0.0, 0.0)) {
        require_regular_k(k);
        return {Complex(1.0, 0.0), 1};
    }
    SeriesEval ev = bessel_series(x * lambda, k, spec);
    return {ev.f + 0.5 * ev.df, ev.terms_used};
}

Complex psi(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec) {
    return psi_eval(x, lambda, k, spec).value;
}

double dunkl_residual_psi(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec) {
    if (x == Complex(0.0, 0.0)) throw std::invalid_argument("dunkl_residual_psi: x must be nonzero");
    if (lambda == Complex(0.0, 0.0)) {
        require_regular_k(k);
        return 0.0; // psi_0 = 1 and D annihilates constants
    }
    SeriesEval ev = bessel_series(x * lambda, k, spec);
    // Parity split: the even part f(t) differentiates plainly; the odd part
    // f'(t)/2 picks up the extra 2k/x from the reflection term.
    Complex dpsi = lambda * ev.df + 0.5 * lambda * ev.ddf + k * ev.df / x;
    Complex rhs = 2.0 * lambda * (ev.f + 0.5 * ev.df);
    return std::abs(dpsi - rhs);
}

double l_residual_phi(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec) {
    if (x == Complex(0.0, 0.0)) throw std::invalid_argument("l_residual_phi: x must be nonzero");
    SeriesEval ev = bessel_series(x * lambda, k, spec);
    Complex lphi = lambda * lambda * ev.ddf + (2.0 * k / x) * lambda * ev.df;
    return std::abs(lphi - 4.0 * lambda * lambda * ev.f);
}

double l_residual_phi_conjugated(double x, Complex lambda, double k, const SeriesEvalSpec& spec) {
    if (x <= 0.0) throw std::invalid_argument("l_residual_phi_conjugated: x must be positive");
    auto u = [&](double y) { return std::pow(y, k) * phi(Complex(y, 0.0), lambda, Complex(k, 0.0), spec); };
    const double h = std::min(1e-3 * std::max(1.0, x), x / 8.0);
    // Five-point central second derivative.
    Complex upp = (-u(x + 2 * h) + 16.0 * u(x + h) - 30.0 * u(x) + 16.0 * u(x - h) - u(x - 2 * h)) /
                  (12.0 * h * h);
    Complex ux = u(x);
    Complex residual = upp + (k * (1.0 - k) / (x * x)) * ux - 4.0 * lambda * lambda * ux;
    return std::abs(residual) / std::max(std::abs(ux), 1e-300);
}

double shift_check(Complex x, Complex lambda, Complex k, const SeriesEvalSpec& spec) {
    if (x == Complex(0.0, 0.0)) throw std::invalid_argument("shift_check: x must be nonzero");
    Complex lhs = phi_deriv(x, lambda, k, spec) / x;
    Complex rhs = 4.0 * lambda * lambda / (1.0 + 2.0 * k) * phi(x, lambda, k + 1.0, spec);
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale < 1e-300) return 0.0;
    return std::abs(lhs - rhs) / scale;
}

TruncatedBessel truncated_bessel(unsigned n) {
    TruncatedBessel tb;
    tb.n = n;
    const unsigned dim = 2 * n + 1;
    tb.g_coeffs.assign(dim, Rational(0));

    // First-order eigen recursion c_l (l + (1-(-1)^l)(-n-1/2)) = 2 c_{l-1},
    // seeded with c_0 = (-1)^n n!; the denominator vanishes first at l = 2n+1.
    Rational c = factorial(n);
    if (n % 2 == 1) c = -c;
    tb.g_coeffs[0] = c;
    for (unsigned l = 1; l < dim; ++l) {
        long denom = (l % 2 == 0) ? static_cast<long>(l)
                                  : static_cast<long>(l) - 2 * static_cast<long>(n) - 1;
        c = Rational(2) * c / Rational(denom);
        tb.g_coeffs[l] = c;
    }

    // Even part must agree with the closed form (-1)^{n-m} (n-m)!/m! t^{2m}.
    tb.f_coeffs.assign(dim, Rational(0));
    for (unsigned m = 0; m <= n; ++m) {
        Rational a = factorial(n - m) / factorial(m);
        if ((n - m) % 2 == 1) a = -a;
        tb.f_coeffs[2 * m] = a;
        if (tb.g_coeffs[2 * m] != a)
            throw std::logic_error("truncated_bessel: recursion disagrees with the closed form");
    }
    // Odd part must be f'/2.
    for (unsigned m = 0; m + 1 <= n; ++m) {
        Rational expected = Rational(static_cast<long>(m) + 1) * tb.f_coeffs[2 * m + 2];
        if (tb.g_coeffs[2 * m + 1] != expected)
            throw std::logic_error("truncated_bessel: odd part is not f'/2");
    }
    return tb;
}

} // namespace dunkl
