#include "dunkl/transform.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/polyrep.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dunkl {

namespace {

constexpr double kMasterTol = 1e-8;
constexpr double kOperatorTol = 1e-7;
constexpr double kAdjointTol = 1e-9;
constexpr double kPlancherelTol = 1e-7;
constexpr double kInversionTol = 1e-7;
constexpr double kOracleTol = 1e-7;
constexpr double kGaussNormTol = 1e-9;

void require_transform_k(Complex k) {
    if (k.real() <= -0.5)
        throw std::invalid_argument("transform: Re(k) must exceed -1/2");
    require_regular_k(k);
}

// Truncation radius for |integrand| <= e^{-decay x^2 + growth x} x^{2Re k + deg},
// honoring an explicit spec.radius but always enforcing the tail bound.
double pick_radius(const QuadratureSpec& spec, double decay, double growth, Complex k,
                   int poly_degree, double r_min) {
    double R = spec.radius > 0.0
                   ? spec.radius
                   : gaussian_tail_radius(decay, growth, 2.0 * k.real(), poly_degree,
                                          spec.abs_tol, r_min);
    require_tail_bound(R, decay, growth, 2.0 * k.real(), poly_degree, spec.abs_tol);
    return R;
}

// The series stop rule needs the term index to pass |t|^2, so the budget must
// scale with the largest series argument reached inside the quadrature.
SeriesEvalSpec series_spec_for(double max_abs_t) {
    SeriesEvalSpec s;
    s.max_terms = std::max(500, static_cast<int>(max_abs_t * max_abs_t) + 80);
    return s;
}

double rel_err_of(Complex lhs, Complex rhs, double floor_scale = 0.0) {
    double scale = std::max({std::abs(lhs), std::abs(rhs), floor_scale, 1e-300});
    return std::abs(lhs - rhs) / scale;
}

CheckReport make_report(std::string name, double tol) {
    CheckReport r;
    r.check_name = std::move(name);
    r.tolerance = tol;
    return r;
}

} // namespace

Complex GaussianPolynomial::evaluate(Complex z) const {
    Complex sq = z * z;
    return p.evaluate(z) * std::exp(gaussian_sign < 0 ? -sq : sq);
}

RealFunction GaussianPolynomial::as_function() const {
    return [gp = *this](double x) { return gp.evaluate(Complex(x, 0.0)); };
}

ComplexFunction GaussianPolynomial::as_complex_function() const {
    return [gp = *this](Complex z) { return gp.evaluate(z); };
}

GaussianPolynomial gp_add(const GaussianPolynomial& a, const GaussianPolynomial& b) {
    if (a.gaussian_sign != b.gaussian_sign || a.k != b.k)
        throw std::invalid_argument("gp_add: mismatched Gaussian class");
    return {a.p + b.p, a.gaussian_sign, a.k};
}

GaussianPolynomial gp_scale(const GaussianPolynomial& a, Complex c) {
    return {a.p * c, a.gaussian_sign, a.k};
}

GaussianPolynomial gp_mul_x(const GaussianPolynomial& a, unsigned power) {
    return {a.p.times_x(power), a.gaussian_sign, a.k};
}

GaussianPolynomial gp_reflect(const GaussianPolynomial& a) {
    return {a.p.reflected(), a.gaussian_sign, a.k};
}

GaussianPolynomial gp_derivative(const GaussianPolynomial& a) {
    Complex two_sign(2.0 * a.gaussian_sign, 0.0);
    return {a.p.derivative() + a.p.times_x(1) * two_sign, a.gaussian_sign, a.k};
}

GaussianPolynomial gp_dunkl(const GaussianPolynomial& a) {
    auto ctx = numeric_context(a.k);
    // D(p e^{s z^2}) = (D p + 2 s z p) e^{s z^2}: the Gaussian factor is even.
    Complex two_sign(2.0 * a.gaussian_sign, 0.0);
    return {dunkl_apply(a.p, ctx) + a.p.times_x(1) * two_sign, a.gaussian_sign, a.k};
}

GaussianPolynomial gp_bessel_op(const GaussianPolynomial& a) {
    if (!a.p.is_even())
        throw std::invalid_argument("gp_bessel_op: defined on even Gaussian polynomials");
    return gp_dunkl(gp_dunkl(a));
}

TransformResult hankel_sym(const RealFunction& f, Complex lambda, Complex k,
                           const QuadratureSpec& spec) {
    require_transform_k(k);
    double r_min = std::max(9.0, std::abs(lambda.real()) + 9.0);
    double R = pick_radius(spec, 1.0, 2.0 * std::abs(lambda), k, 8, r_min);
    SeriesEvalSpec sspec = series_spec_for(R * std::abs(lambda));
    auto g = [&](double x) { return phi(Complex(x, 0.0), lambda, k, sspec) * f(x); };
    QuadratureResult q = integrate_halfline(g, 2.0 * k, R, spec);
    return {2.0 / gamma_complex(k + 0.5) * q.value, q.info};
}

TransformResult hankel_nonsym(const RealFunction& f, Complex lambda, Complex k,
                              const QuadratureSpec& spec) {
    require_transform_k(k);
    double r_min = std::max(9.0, std::abs(lambda.real()) + 9.0);
    double R = pick_radius(spec, 1.0, 2.0 * std::abs(lambda), k, 8, r_min);
    SeriesEvalSpec sspec = series_spec_for(R * std::abs(lambda));
    auto g = [&](double x) { return psi(Complex(x, 0.0), lambda, k, sspec) * f(x); };
    QuadratureResult q = integrate_fullline(g, 2.0 * k, R, spec);
    return {q.value / gamma_complex(k + 0.5), q.info};
}

GaussianPolynomial hankel_gaussian_oracle(const GaussianPolynomial& f) {
    if (f.gaussian_sign != -1)
        throw std::invalid_argument("hankel_gaussian_oracle: expects the e^{-x^2} class");
    auto ctx = numeric_context(f.k);
    return {exp_half_d_squared(f.p, ctx, +1), +1, f.k};
}

GaussianPolynomial hankel_gaussian_oracle_inverse(const GaussianPolynomial& g) {
    if (g.gaussian_sign != +1)
        throw std::invalid_argument("hankel_gaussian_oracle_inverse: expects the e^{+lambda^2} class");
    auto ctx = numeric_context(g.k);
    return {exp_half_d_squared(g.p, ctx, -1), -1, g.k};
}

TransformResult hankel_inverse_im(const ComplexFunction& g, double x, Complex k,
                                  const QuadratureSpec& spec) {
    require_transform_k(k);
    // g(it) is assumed Gaussian-class in t (q(it) e^{-t^2}); the kernel
    // psi_x(-it) stays bounded on the imaginary axis.
    double R = pick_radius(spec, 1.0, 0.0, k, 12, 9.0);
    SeriesEvalSpec sspec = series_spec_for(R * std::abs(x));
    Complex lam_x(x, 0.0);
    auto integrand = [&](double t) {
        return psi(Complex(0.0, -t), lam_x, k, sspec) * g(Complex(0.0, t));
    };
    QuadratureResult q = integrate_fullline(integrand, 2.0 * k, R, spec);
    return {q.value / gamma_complex(k + 0.5), q.info};
}

TransformResult inner_re(const RealFunction& f, const RealFunction& g, Complex k,
                         const QuadratureSpec& spec) {
    require_transform_k(k);
    double R = pick_radius(spec, 2.0, 0.0, k, 12, 7.0);
    auto integrand = [&](double x) { return f(x) * g(x); };
    QuadratureResult q = integrate_fullline(integrand, 2.0 * k, R, spec);
    return {q.value, q.info};
}

TransformResult inner_im(const ComplexFunction& F, const ComplexFunction& G, Complex k,
                         const QuadratureSpec& spec) {
    require_transform_k(k);
    double R = pick_radius(spec, 2.0, 0.0, k, 12, 7.0);
    auto integrand = [&](double t) { return F(Complex(0.0, t)) * G(Complex(0.0, -t)); };
    QuadratureResult q = integrate_fullline(integrand, 2.0 * k, R, spec);
    return {q.value, q.info};
}

CheckReport master_check(Complex k, Complex lambda, Complex mu, double alpha,
                         const QuadratureSpec& spec) {
    if (!(alpha > 0.0)) throw std::invalid_argument("master_check: alpha must be positive");
    require_transform_k(k);
    CheckReport rep = make_report("master-nonsym", kMasterTol);
    rep.parameters = {{"k", k}, {"lambda", lambda}, {"mu", mu}, {"alpha", alpha}};

    double growth = 2.0 * (std::abs(lambda) + std::abs(mu));
    double R = pick_radius(spec, alpha, growth, k, 2, 9.0 / std::sqrt(alpha));
    SeriesEvalSpec sspec = series_spec_for(R * std::max(std::abs(lambda), std::abs(mu)));
    auto integrand = [&](double t) {
        Complex xt(t, 0.0);
        return psi(xt, lambda, k, sspec) * psi(xt, mu, k, sspec) * std::exp(-alpha * t * t);
    };
    QuadratureResult q = integrate_fullline(integrand, 2.0 * k, R, spec);

    SeriesEvalSpec sspec2 = series_spec_for(std::abs(lambda) * std::abs(mu) / alpha);
    Complex rhs = gamma_complex(k + 0.5) * std::pow(alpha, -k - 0.5) *
                  std::exp((lambda * lambda + mu * mu) / alpha) *
                  psi(mu / alpha, lambda, k, sspec2);

    rep.lhs = q.value;
    rep.rhs = rhs;
    rep.rel_err = rel_err_of(rep.lhs, rep.rhs);
    rep.quadrature = q.info;
    rep.pass = rep.rel_err < rep.tolerance;
    return rep;
}

CheckReport master_check_sym(Complex k, Complex lambda, Complex mu, double alpha,
                             const QuadratureSpec& spec) {
    if (!(alpha > 0.0)) throw std::invalid_argument("master_check_sym: alpha must be positive");
    require_transform_k(k);
    CheckReport rep = make_report("master-sym", kMasterTol);
    rep.parameters = {{"k", k}, {"lambda", lambda}, {"mu", mu}, {"alpha", alpha}};

    double growth = 2.0 * (std::abs(lambda) + std::abs(mu));
    double R = pick_radius(spec, alpha, growth, k, 2, 9.0 / std::sqrt(alpha));
    SeriesEvalSpec sspec = series_spec_for(R * std::max(std::abs(lambda), std::abs(mu)));
    auto integrand = [&](double t) {
        Complex xt(t, 0.0);
        return phi(xt, lambda, k, sspec) * phi(xt, mu, k, sspec) * std::exp(-alpha * t * t);
    };
    QuadratureResult q = integrate_halfline(integrand, 2.0 * k, R, spec);

    SeriesEvalSpec sspec2 = series_spec_for(std::abs(lambda) * std::abs(mu) / alpha);
    Complex rhs = gamma_complex(k + 0.5) * std::pow(alpha, -k - 0.5) *
                  std::exp((lambda * lambda + mu * mu) / alpha) *
                  phi(mu / alpha, lambda, k, sspec2);

    rep.lhs = 2.0 * q.value;
    rep.rhs = rhs;
    rep.rel_err = rel_err_of(rep.lhs, rep.rhs);
    rep.quadrature = q.info;
    rep.pass = rep.rel_err < rep.tolerance;
    return rep;
}

std::vector<CheckReport> operator_transform_check(Complex k, const QuadratureSpec& spec) {
    require_transform_k(k);
    std::vector<CheckReport> out;

    const std::vector<NumericPolynomial> even_polys = {
        NumericPolynomial(std::vector<Complex>{{1, 0}, {0, 0}, {2, 0}}),
        NumericPolynomial(std::vector<Complex>{{3, 0}, {0, 0}, {-1, 0}, {0, 0}, {1, 0}}),
    };
    const std::vector<double> sym_grid = {0.35, 0.8, 1.45};

    CheckReport rep_a = make_report("transform-sym-L-multiplier", kOperatorTol);
    CheckReport rep_b = make_report("transform-sym-x2-to-L", kOperatorTol);
    CheckReport rep_c = make_report("transform-sym-euler", kOperatorTol);
    for (auto& r : {&rep_a, &rep_b, &rep_c}) r->parameters = {{"k", k}};

    for (const auto& p : even_polys) {
        GaussianPolynomial f{p, -1, k};
        GaussianPolynomial fhat = hankel_gaussian_oracle(f);
        GaussianPolynomial Lf = gp_bessel_op(f);
        GaussianPolynomial x2f = gp_scale(gp_mul_x(f, 2), 4.0);
        GaussianPolynomial euler_f = gp_scale(gp_mul_x(gp_derivative(f), 1), 4.0);
        GaussianPolynomial L_fhat = gp_bessel_op(fhat);
        // -4 lambda d/dlambda - 4 - 8k applied on the spectral side
        GaussianPolynomial euler_rhs =
            gp_add(gp_scale(gp_mul_x(gp_derivative(fhat), 1), -4.0), gp_scale(fhat, -(4.0 + 8.0 * k)));
        for (double lam : sym_grid) {
            Complex lambda(lam, 0.0);
            TransformResult t_f = hankel_sym(f.as_function(), lambda, k, spec);
            TransformResult t_Lf = hankel_sym(Lf.as_function(), lambda, k, spec);
            double e_a = rel_err_of(t_Lf.value, 4.0 * lambda * lambda * t_f.value);
            if (e_a > rep_a.rel_err) {
                rep_a.rel_err = e_a;
                rep_a.lhs = t_Lf.value;
                rep_a.rhs = 4.0 * lambda * lambda * t_f.value;
                rep_a.quadrature = t_Lf.info;
            }
            TransformResult t_x2 = hankel_sym(x2f.as_function(), lambda, k, spec);
            double e_b = rel_err_of(t_x2.value, L_fhat.evaluate(lambda));
            if (e_b > rep_b.rel_err) {
                rep_b.rel_err = e_b;
                rep_b.lhs = t_x2.value;
                rep_b.rhs = L_fhat.evaluate(lambda);
                rep_b.quadrature = t_x2.info;
            }
            TransformResult t_euler = hankel_sym(euler_f.as_function(), lambda, k, spec);
            double e_c = rel_err_of(t_euler.value, euler_rhs.evaluate(lambda));
            if (e_c > rep_c.rel_err) {
                rep_c.rel_err = e_c;
                rep_c.lhs = t_euler.value;
                rep_c.rhs = euler_rhs.evaluate(lambda);
                rep_c.quadrature = t_euler.info;
            }
        }
    }

    const std::vector<NumericPolynomial> general_polys = {
        NumericPolynomial(std::vector<Complex>{{1, 0}, {1, 0}}),
        NumericPolynomial(std::vector<Complex>{{0, 0}, {0, 0}, {1, 0}, {1, 0}}),
    };
    const std::vector<double> nonsym_grid = {-1.3, -0.6, 0.45, 1.15};

    CheckReport rep_d = make_report("transform-nonsym-D-multiplier", kOperatorTol);
    CheckReport rep_e = make_report("transform-nonsym-2x-to-D", kOperatorTol);
    CheckReport rep_f = make_report("transform-nonsym-reflection", kOperatorTol);
    for (auto& r : {&rep_d, &rep_e, &rep_f}) r->parameters = {{"k", k}};

    for (const auto& p : general_polys) {
        GaussianPolynomial f{p, -1, k};
        GaussianPolynomial fhat = hankel_gaussian_oracle(f);
        GaussianPolynomial Df = gp_dunkl(f);
        GaussianPolynomial two_x_f = gp_scale(gp_mul_x(f, 1), 2.0);
        GaussianPolynomial D_fhat = gp_dunkl(fhat);
        GaussianPolynomial sf = gp_reflect(f);
        for (double lam : nonsym_grid) {
            Complex lambda(lam, 0.0);
            TransformResult t_f = hankel_nonsym(f.as_function(), lambda, k, spec);
            TransformResult t_Df = hankel_nonsym(Df.as_function(), lambda, k, spec);
            double e_d = rel_err_of(t_Df.value, -2.0 * lambda * t_f.value);
            if (e_d > rep_d.rel_err) {
                rep_d.rel_err = e_d;
                rep_d.lhs = t_Df.value;
                rep_d.rhs = -2.0 * lambda * t_f.value;
                rep_d.quadrature = t_Df.info;
            }
            TransformResult t_2x = hankel_nonsym(two_x_f.as_function(), lambda, k, spec);
            double e_e = rel_err_of(t_2x.value, D_fhat.evaluate(lambda));
            if (e_e > rep_e.rel_err) {
                rep_e.rel_err = e_e;
                rep_e.lhs = t_2x.value;
                rep_e.rhs = D_fhat.evaluate(lambda);
                rep_e.quadrature = t_2x.info;
            }
            TransformResult t_sf = hankel_nonsym(sf.as_function(), lambda, k, spec);
            TransformResult t_neg = hankel_nonsym(f.as_function(), -lambda, k, spec);
            double e_f = rel_err_of(t_sf.value, t_neg.value);
            if (e_f > rep_f.rel_err) {
                rep_f.rel_err = e_f;
                rep_f.lhs = t_sf.value;
                rep_f.rhs = t_neg.value;
                rep_f.quadrature = t_sf.info;
            }
        }
    }

    for (auto* r : {&rep_a, &rep_b, &rep_c, &rep_d, &rep_e, &rep_f}) {
        r->pass = r->rel_err < r->tolerance;
        out.push_back(*r);
    }
    return out;
}

std::vector<CheckReport> adjointness_check(Complex k, const QuadratureSpec& spec) {
    require_transform_k(k);
    std::vector<CheckReport> out;

    auto gaussian_poly = [&](std::vector<Complex> c) {
        return GaussianPolynomial{NumericPolynomial(std::move(c)), -1, k};
    };

    {
        CheckReport rep = make_report("adjoint-L-symmetric", kAdjointTol);
        rep.parameters = {{"k", k}};
        const std::vector<std::pair<GaussianPolynomial, GaussianPolynomial>> pairs = {
            {gaussian_poly({{1, 0}}), gaussian_poly({{0, 0}, {0, 0}, {1, 0}})},
            {gaussian_poly({{1, 0}, {0, 0}, {1, 0}}),
             gaussian_poly({{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}})},
        };
        for (const auto& [f, g] : pairs) {
            TransformResult lhs = inner_re(gp_bessel_op(f).as_function(), g.as_function(), k, spec);
            TransformResult rhs = inner_re(f.as_function(), gp_bessel_op(g).as_function(), k, spec);
            double e = rel_err_of(lhs.value, rhs.value, 1.0);
            if (e > rep.rel_err) {
                rep.rel_err = e;
                rep.lhs = lhs.value;
                rep.rhs = rhs.value;
                rep.quadrature = lhs.info;
            }
        }
        rep.pass = rep.rel_err < rep.tolerance;
        out.push_back(rep);
    }

    {
        CheckReport rep = make_report("adjoint-D-antisymmetric", kAdjointTol);
        rep.parameters = {{"k", k}};
        const std::vector<std::pair<GaussianPolynomial, GaussianPolynomial>> pairs = {
            {gaussian_poly({{1, 0}}), gaussian_poly({{0, 0}, {1, 0}})},
            {gaussian_poly({{0, 0}, {1, 0}}), gaussian_poly({{0, 0}, {0, 0}, {1, 0}})},
            {gaussian_poly({{1, 0}, {1, 0}}), gaussian_poly({{0, 0}, {1, 0}, {0, 0}, {1, 0}})},
        };
        for (const auto& [f, g] : pairs) {
            TransformResult lhs = inner_re(gp_dunkl(f).as_function(), g.as_function(), k, spec);
            TransformResult rhs = inner_re(f.as_function(), gp_dunkl(g).as_function(), k, spec);
            // anti-self-adjoint: <Df, g> = -<f, Dg>
            double e = rel_err_of(lhs.value, -rhs.value, 1.0);
            if (e > rep.rel_err) {
                rep.rel_err = e;
                rep.lhs = lhs.value;
                rep.rhs = -rhs.value;
                rep.quadrature = lhs.info;
            }
        }
        rep.pass = rep.rel_err < rep.tolerance;
        out.push_back(rep);
    }

    {
        CheckReport rep = make_report("adjoint-D-diagonal-zero", kAdjointTol);
        rep.parameters = {{"k", k}};
        GaussianPolynomial f = gaussian_poly({{1, 0}, {1, 0}});
        TransformResult df_f = inner_re(gp_dunkl(f).as_function(), f.as_function(), k, spec);
        TransformResult ff = inner_re(f.as_function(), f.as_function(), k, spec);
        rep.lhs = df_f.value;
        rep.rhs = 0.0;
        rep.rel_err = std::abs(df_f.value) / std::max(std::abs(ff.value), 1e-300);
        rep.quadrature = df_f.info;
        rep.pass = rep.rel_err < rep.tolerance;
        out.push_back(rep);
    }

    return out;
}

CheckReport plancherel_check(const GaussianPolynomial& f, const GaussianPolynomial& g, Complex k,
                             const QuadratureSpec& spec) {
    require_transform_k(k);
    CheckReport rep = make_report("plancherel", kPlancherelTol);
    rep.parameters = {{"k", k},
                      {"deg_f", static_cast<double>(f.p.degree())},
                      {"deg_g", static_cast<double>(g.p.degree())}};
    TransformResult lhs = inner_re(f.as_function(), g.as_function(), k, spec);
    GaussianPolynomial fhat = hankel_gaussian_oracle(f);
    GaussianPolynomial ghat = hankel_gaussian_oracle(g);
    TransformResult rhs =
        inner_im(fhat.as_complex_function(), ghat.as_complex_function(), k, spec);
    rep.lhs = lhs.value;
    rep.rhs = rhs.value;
    rep.rel_err = rel_err_of(lhs.value, rhs.value);
    rep.quadrature = rhs.info;
    rep.pass = rep.rel_err < rep.tolerance;
    return rep;
}

std::vector<CheckReport> inversion_check(Complex k, int degmax, const QuadratureSpec& spec) {
    require_transform_k(k);
    std::vector<CheckReport> out;

    CheckReport rep_im = make_report("inversion-im-of-re", kInversionTol);
    rep_im.parameters = {{"k", k}, {"degmax", static_cast<double>(degmax)}};
    rep_im.note = "spectral side taken exactly; inverse transform by quadrature";
    const std::vector<double> x_samples = {0.0, 0.6, -1.1, 1.7, -2.2};
    for (int j = 0; j <= degmax; ++j) {
        GaussianPolynomial f{NumericPolynomial::monomial(j), -1, k};
        GaussianPolynomial fhat = hankel_gaussian_oracle(f);
        double scale = 0.0;
        for (double x : x_samples) scale = std::max(scale, std::abs(f.evaluate(Complex(x, 0.0))));
        for (double x : x_samples) {
            TransformResult v = hankel_inverse_im(fhat.as_complex_function(), x, k, spec);
            Complex expect = f.evaluate(Complex(x, 0.0));
            double e = std::abs(v.value - expect) / std::max(std::abs(expect), 1e-3 * scale);
            if (e > rep_im.rel_err) {
                rep_im.rel_err = e;
                rep_im.lhs = v.value;
                rep_im.rhs = expect;
                rep_im.quadrature = v.info;
            }
        }
    }
    rep_im.pass = rep_im.rel_err < rep_im.tolerance;
    out.push_back(rep_im);

    CheckReport rep_re = make_report("inversion-re-of-im", kInversionTol);
    rep_re.parameters = {{"k", k}, {"degmax", static_cast<double>(degmax)}};
    rep_re.note = "x side taken exactly; forward transform by quadrature";
    const std::vector<double> lam_samples = {0.0, 0.7, -1.3};
    for (int j = 0; j <= degmax; ++j) {
        GaussianPolynomial g{NumericPolynomial::monomial(j), +1, k};
        GaussianPolynomial f = hankel_gaussian_oracle_inverse(g);
        double scale = 0.0;
        for (double lam : lam_samples)
            scale = std::max(scale, std::abs(g.evaluate(Complex(lam, 0.0))));
        for (double lam : lam_samples) {
            TransformResult v = hankel_nonsym(f.as_function(), Complex(lam, 0.0), k, spec);
            Complex expect = g.evaluate(Complex(lam, 0.0));
            double e = std::abs(v.value - expect) / std::max(std::abs(expect), 1e-3 * scale);
            if (e > rep_re.rel_err) {
                rep_re.rel_err = e;
                rep_re.lhs = v.value;
                rep_re.rhs = expect;
                rep_re.quadrature = v.info;
            }
        }
    }
    rep_re.pass = rep_re.rel_err < rep_re.tolerance;
    out.push_back(rep_re);

    return out;
}

std::vector<CheckReport> oracle_agreement_check(Complex k, int degmax, const QuadratureSpec& spec) {
    require_transform_k(k);
    std::vector<CheckReport> out;
    const std::vector<double> lam_samples = {-1.8, -0.5, 0.5, 1.2, 2.0};
    CheckReport rep = make_report("transform-oracle-agreement", kOracleTol);
    rep.parameters = {{"k", k}, {"degmax", static_cast<double>(degmax)}};
    for (int j = 0; j <= degmax; ++j) {
        GaussianPolynomial f{NumericPolynomial::monomial(j), -1, k};
        GaussianPolynomial fhat = hankel_gaussian_oracle(f);
        double scale = 0.0;
        for (double lam : lam_samples)
            scale = std::max(scale, std::abs(fhat.evaluate(Complex(lam, 0.0))));
        for (double lam : lam_samples) {
            Complex lambda(lam, 0.0);
            TransformResult v = hankel_nonsym(f.as_function(), lambda, k, spec);
            Complex expect = fhat.evaluate(lambda);
            double e = std::abs(v.value - expect) / std::max(std::abs(expect), 1e-3 * scale);
            if (e > rep.rel_err) {
                rep.rel_err = e;
                rep.lhs = v.value;
                rep.rhs = expect;
                rep.quadrature = v.info;
            }
        }
    }
    rep.pass = rep.rel_err < rep.tolerance;
    out.push_back(rep);
    return out;
}

std::vector<CheckReport> sym_nonsym_consistency_check(Complex k, const QuadratureSpec& spec) {
    require_transform_k(k);
    std::vector<CheckReport> out;

    {
        CheckReport rep = make_report("sym-nonsym-even-agreement", kMasterTol);
        rep.parameters = {{"k", k}};
        GaussianPolynomial f{NumericPolynomial(std::vector<Complex>{{1, 0}, {0, 0}, {1, 0}}), -1, k};
        for (double lam : {0.4, 0.9, 1.3}) {
            Complex lambda(lam, 0.0);
            TransformResult nonsym = hankel_nonsym(f.as_function(), lambda, k, spec);
            TransformResult sym = hankel_sym(f.as_function(), lambda, k, spec);
            double e = rel_err_of(nonsym.value, sym.value);
            if (e > rep.rel_err) {
                rep.rel_err = e;
                rep.lhs = nonsym.value;
                rep.rhs = sym.value;
                rep.quadrature = nonsym.info;
            }
        }
        rep.pass = rep.rel_err < rep.tolerance;
        out.push_back(rep);
    }

    {
        // psi^1_lambda(x) = 2 lambda x /(1+2k) phi_lambda(x; k+1): the odd
        // part of the kernel lives in the k+1 even theory.
        CheckReport rep = make_report("odd-part-shift-pointwise", kMasterTol);
        rep.parameters = {{"k", k}};
        for (double x : {0.3, 0.9, 1.6})
            for (double lam : {0.5, 1.2}) {
                Complex xc(x, 0.0), lambda(lam, 0.0);
                SeriesEval ev = bessel_series(xc * lambda, k);
                Complex lhs = 0.5 * ev.df;
                Complex rhs = 2.0 * lambda * xc / (1.0 + 2.0 * k) * phi(xc, lambda, k + 1.0);
                double e = rel_err_of(lhs, rhs);
                if (e > rep.rel_err) {
                    rep.rel_err = e;
                    rep.lhs = lhs;
                    rep.rhs = rhs;
                }
            }
        rep.pass = rep.rel_err < rep.tolerance;
        out.push_back(rep);
    }

    {
        // integral of the odd kernel parts against the Gaussian: the odd
        // component of the master identity.
        CheckReport rep = make_report("odd-part-master", kMasterTol);
        rep.parameters = {{"k", k}};
        const Complex lambda(0.8, 0.0), mu(1.1, 0.0);
        double R = pick_radius(spec, 1.0, 2.0 * (std::abs(lambda) + std::abs(mu)), k, 2, 9.0);
        SeriesEvalSpec sspec = series_spec_for(R * std::max(std::abs(lambda), std::abs(mu)));
        auto integrand = [&](double t) {
            Complex xt(t, 0.0);
            Complex psi1_l = 0.5 * bessel_series(xt * lambda, k, sspec).df;
            Complex psi1_m = 0.5 * bessel_series(xt * mu, k, sspec).df;
            return psi1_l * psi1_m * std::exp(-t * t);
        };
        QuadratureResult q = integrate_fullline(integrand, 2.0 * k, R, spec);
        Complex psi1_at = 0.5 * bessel_series(lambda * mu, k).df;
        Complex rhs = gamma_complex(k + 0.5) * std::exp(lambda * lambda + mu * mu) * psi1_at;
        rep.lhs = q.value;
        rep.rhs = rhs;
        rep.rel_err = rel_err_of(rep.lhs, rep.rhs);
        rep.quadrature = q.info;
        rep.pass = rep.rel_err < rep.tolerance;
        out.push_back(rep);
    }

    return out;
}

CheckReport gaussian_norm_check(Complex k, const QuadratureSpec& spec) {
    require_transform_k(k);
    CheckReport rep = make_report("gaussian-norm", kGaussNormTol);
    rep.parameters = {{"k", k}};
    auto gauss = [](double x) { return Complex(std::exp(-x * x), 0.0); };
    TransformResult lhs = inner_re(gauss, gauss, k, spec);
    Complex rhs = std::pow(2.0, -k - 0.5) * gamma_complex(k + 0.5);
    rep.lhs = lhs.value;
    rep.rhs = rhs;
    rep.rel_err = rel_err_of(lhs.value, rhs);
    rep.quadrature = lhs.info;
    rep.pass = rep.rel_err < rep.tolerance;
    return rep;
}

} // namespace dunkl
