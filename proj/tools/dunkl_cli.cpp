#include <CLI11.hpp>
#include <json.hpp>

#include "dunkl/bessel.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/report.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/truncated.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using dunkl::CheckReport;
using dunkl::Complex;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// "a" or "a,b" -> a + bi
Complex parse_complex(const std::string& text) {
    try {
        std::size_t pos = 0;
        double re = std::stod(text, &pos);
        if (pos == text.size()) return {re, 0.0};
        if (text[pos] != ',') throw std::invalid_argument("");
        std::size_t pos2 = 0;
        double im = std::stod(text.substr(pos + 1), &pos2);
        if (pos + 1 + pos2 != text.size()) throw std::invalid_argument("");
        return {re, im};
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a number 're' or a pair 're,im', got '" + text + "'");
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json complex_json(Complex z) {
    if (z.imag() == 0.0) return json(z.real());
    return json::array({z.real(), z.imag()});
}

std::string resolve_out(const std::string& out) {
    if (out.empty() || out.front() == '/') return out;
    const char* dir = std::getenv("DUNKL_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return out;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + out;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::string path = resolve_out(out);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
}

dunkl::QuadratureSpec quad_spec(double radius, double rel_tol) {
    dunkl::QuadratureSpec spec;
    if (radius > 0) spec.radius = radius;
    if (rel_tol > 0) {
        spec.rel_tol = rel_tol;
        spec.abs_tol = rel_tol * 1e-2;
    }
    return spec;
}

dunkl::SeriesEvalSpec series_spec(double rel_tol) {
    dunkl::SeriesEvalSpec spec;
    if (rel_tol > 0) spec.rel_tol = rel_tol;
    return spec;
}

dunkl::GaussianPolynomial monomial_gaussian(unsigned degree, Complex k) {
    dunkl::GaussianPolynomial g;
    g.p = dunkl::NumericPolynomial::monomial(degree, Complex(1.0, 0.0));
    g.gaussian_sign = -1;
    g.k = k;
    return g;
}

dunkl::GaussianPolynomial gaussian_from(std::initializer_list<double> coeffs, Complex k) {
    std::vector<Complex> c;
    for (double v : coeffs) c.emplace_back(v, 0.0);
    dunkl::GaussianPolynomial g;
    g.p = dunkl::NumericPolynomial(std::move(c));
    g.gaussian_sign = -1;
    g.k = k;
    return g;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

int emit_reports(const std::vector<CheckReport>& reports, const std::string& out) {
    emit(dunkl::to_json(reports) + "\n", out);
    return all_pass(reports) ? kExitPass : kExitCheckFailure;
}

int run_eval(const std::string& command, Complex k, Complex lambda, double x, double rel_tol,
             const std::string& out, const std::string& format) {
    const bool even_only = (command == "eval-phi");
    dunkl::SeriesEvalSpec spec = series_spec(rel_tol);
    auto value_at = [&](Complex xx) {
        return even_only ? dunkl::phi_eval(xx, lambda, k, spec) : dunkl::psi_eval(xx, lambda, k, spec);
    };
    if (format == "csv") {
        std::ostringstream os;
        os << "x," << (even_only ? "phi_re,phi_im" : "psi_re,psi_im") << "\n";
        for (int i = 0; i <= 200; ++i) {
            double xi = x * (i - 100) / 100.0;
            Complex v = value_at(Complex(xi, 0.0)).value;
            os << fmt(xi) << "," << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
        }
        emit(os.str(), out);
        return kExitPass;
    }
    dunkl::PhiEval ev = value_at(Complex(x, 0.0));
    json j;
    j["schema_version"] = dunkl::kReportSchemaVersion;
    j["command"] = command;
    j["k"] = complex_json(k);
    j["lambda"] = complex_json(lambda);
    j["x"] = x;
    j["value"] = json::array({ev.value.real(), ev.value.imag()});
    j["terms_used"] = ev.terms_used;
    emit(j.dump(2) + "\n", out);
    return kExitPass;
}

int run_transform(Complex k, Complex lambda, unsigned degree, double radius, double rel_tol,
                  const std::string& out, const std::string& format) {
    dunkl::QuadratureSpec spec = quad_spec(radius, rel_tol);
    dunkl::GaussianPolynomial f = monomial_gaussian(degree, k);
    dunkl::GaussianPolynomial oracle = dunkl::hankel_gaussian_oracle(f);
    if (format == "csv") {
        std::ostringstream os;
        os << "lambda_re,lambda_im,re,im\n";
        for (int i = 0; i <= 100; ++i) {
            Complex li = lambda * ((i - 50) / 50.0);
            Complex v = dunkl::hankel_nonsym(f.as_function(), li, k, spec).value;
            os << fmt(li.real()) << "," << fmt(li.imag()) << "," << fmt(v.real()) << ","
               << fmt(v.imag()) << "\n";
        }
        emit(os.str(), out);
        return kExitPass;
    }
    dunkl::TransformResult r = dunkl::hankel_nonsym(f.as_function(), lambda, k, spec);
    Complex expected = oracle.evaluate(lambda);
    double scale = std::max({std::abs(r.value), std::abs(expected), 1e-300});
    double rel_err = std::abs(r.value - expected) / scale;
    const double tol = 1e-7;
    json j;
    j["schema_version"] = dunkl::kReportSchemaVersion;
    j["command"] = "transform";
    j["k"] = complex_json(k);
    j["lambda"] = complex_json(lambda);
    j["degree"] = degree;
    j["value"] = json::array({r.value.real(), r.value.imag()});
    j["closed_form"] = json::array({expected.real(), expected.imag()});
    j["rel_err"] = rel_err;
    j["tolerance"] = tol;
    j["quadrature"] = {{"radius", r.info.radius}, {"panels", r.info.panels}, {"rule", r.info.rule}};
    j["pass"] = (rel_err < tol);
    emit(j.dump(2) + "\n", out);
    return rel_err < tol ? kExitPass : kExitCheckFailure;
}

std::vector<std::pair<dunkl::GaussianPolynomial, dunkl::GaussianPolynomial>>
plancherel_pairs(Complex k) {
    return {
        {gaussian_from({1, -2, 0, 3, 0, 1}, k), gaussian_from({2, 1, -1, 0, 2, 0}, k)},
        {gaussian_from({0, 1, 1, 0, -2, 1}, k), gaussian_from({3, 0, -1, 2, 0, -1}, k)},
        {gaussian_from({1, 0, 0, 0, 0, 2}, k), gaussian_from({0, 0, 4, 0, 1, 0}, k)},
    };
}

json truncated_checks_json(unsigned n, bool& all_ok) {
    json doc = json::parse(dunkl::truncated_module_json(n));
    for (const auto& chk : doc["checks"]) {
        bool informational = chk.contains("informational") && chk["informational"].get<bool>();
        if (!informational && !chk["pass"].get<bool>()) all_ok = false;
    }
    return doc;
}

int run_truncated_report(unsigned n, const std::string& out) {
    bool ok = true;
    json doc = truncated_checks_json(n, ok);
    emit(doc.dump(2) + "\n", out);
    return ok ? kExitPass : kExitCheckFailure;
}

int run_full_suite(unsigned nmax, double radius, double rel_tol, const std::string& out) {
    dunkl::QuadratureSpec spec = quad_spec(radius, rel_tol);
    std::vector<CheckReport> reports;
    auto append = [&reports](std::vector<CheckReport> more) {
        for (auto& r : more) reports.push_back(std::move(r));
    };
    const double ks[] = {0.25, 1.0, 2.5};
    for (double kv : ks) {
        Complex k(kv, 0.0);
        reports.push_back(dunkl::gaussian_norm_check(k, spec));
        append(dunkl::adjointness_check(k, spec));
        append(dunkl::operator_transform_check(k, spec));
        append(dunkl::oracle_agreement_check(k, 4, spec));
        append(dunkl::inversion_check(k, 3, spec));
        append(dunkl::sym_nonsym_consistency_check(k, spec));
        for (const auto& [f, g] : plancherel_pairs(k))
            reports.push_back(dunkl::plancherel_check(f, g, k, spec));
        for (double lv : {0.0, 0.7})
            for (double mv : {0.5, -1.1})
                for (double av : {1.0, 2.0}) {
                    reports.push_back(dunkl::master_check(k, Complex(lv, 0), Complex(mv, 0), av, spec));
                    reports.push_back(
                        dunkl::master_check_sym(k, Complex(lv, 0), Complex(mv, 0), av, spec));
                }
    }
    bool ok = all_pass(reports);

    json doc = json::parse(dunkl::to_json(reports));
    json trunc = json::array();
    for (unsigned n = 0; n <= nmax; ++n) trunc.push_back(truncated_checks_json(n, ok));
    doc["truncated"] = std::move(trunc);
    doc["pass"] = ok;
    emit(doc.dump(2) + "\n", out);
    return ok ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluator and verification harness for the rank-one Dunkl "
                 "eigenfunctions, Hankel-type transforms and their finite truncations"};
    app.require_subcommand(1);

    std::string k_str = "1";
    std::string lambda_str = "1";
    std::string mu_str = "0.5";
    double alpha = 1.0;
    double x = 0.5;
    unsigned n = 0;
    unsigned nmax = 6;
    double rel_tol = 0.0;
    double radius = 0.0;
    std::string out;
    std::string format = "json";

    auto add_common = [&](CLI::App* cmd, bool with_curve) {
        cmd->add_option("--k", k_str, "coupling parameter, 're' or 're,im'");
        cmd->add_option("--rel-tol", rel_tol, "series/quadrature relative tolerance override");
        cmd->add_option("--radius", radius, "fixed truncation radius (0 = automatic tail bound)");
        cmd->add_option("--out", out, "output file (default stdout; relative paths join "
                                      "DUNKL_OUT_DIR when set)");
        if (with_curve)
            cmd->add_option("--format", format, "json or csv")
                ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* eval_phi = app.add_subcommand("eval-phi", "evaluate the even eigenfunction");
    eval_phi->add_option("--lambda", lambda_str, "spectral parameter");
    eval_phi->add_option("--x", x, "evaluation point (csv: curve endpoint)");
    add_common(eval_phi, true);

    CLI::App* eval_psi = app.add_subcommand("eval-psi", "evaluate the full eigenfunction");
    eval_psi->add_option("--lambda", lambda_str, "spectral parameter");
    eval_psi->add_option("--x", x, "evaluation point (csv: curve endpoint)");
    add_common(eval_psi, true);

    CLI::App* transform =
        app.add_subcommand("transform", "transform of x^n e^{-x^2} against the closed form");
    transform->add_option("--lambda", lambda_str, "spectral parameter (csv: sweep endpoint)");
    transform->add_option("--n", n, "monomial degree of the integrand");
    add_common(transform, true);

    CLI::App* vmaster = app.add_subcommand("verify-master", "bilinear Gaussian master identity");
    vmaster->add_option("--lambda", lambda_str, "first spectral parameter");
    vmaster->add_option("--mu", mu_str, "second spectral parameter");
    vmaster->add_option("--alpha", alpha, "Gaussian weight exponent")->check(CLI::PositiveNumber);
    add_common(vmaster, false);

    CLI::App* vops = app.add_subcommand(
        "verify-operators", "operator exchange identities and adjointness under the transforms");
    add_common(vops, false);

    CLI::App* vplan =
        app.add_subcommand("verify-plancherel", "Plancherel pairing and Gaussian norm");
    add_common(vplan, false);

    CLI::App* vinv = app.add_subcommand(
        "verify-inversion", "round trips, closed-form agreement and even/odd reductions");
    add_common(vinv, false);

    CLI::App* trep =
        app.add_subcommand("truncated-report", "exact finite module report at k = -n - 1/2");
    trep->add_option("--n", n, "truncation index");
    trep->add_option("--out", out, "output file (default stdout; relative paths join "
                                   "DUNKL_OUT_DIR when set)");

    CLI::App* fsuite = app.add_subcommand("full-suite", "every verification at default grids");
    fsuite->add_option("--nmax", nmax, "largest truncation index")->check(CLI::Range(0u, 10u));
    add_common(fsuite, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Complex k = parse_complex(k_str);
        Complex lambda = parse_complex(lambda_str);
        Complex mu = parse_complex(mu_str);
        dunkl::QuadratureSpec spec = quad_spec(radius, rel_tol);

        if (eval_phi->parsed()) return run_eval("eval-phi", k, lambda, x, rel_tol, out, format);
        if (eval_psi->parsed()) return run_eval("eval-psi", k, lambda, x, rel_tol, out, format);
        if (transform->parsed()) return run_transform(k, lambda, n, radius, rel_tol, out, format);
        if (vmaster->parsed()) {
            std::vector<CheckReport> reports;
            reports.push_back(dunkl::master_check(k, lambda, mu, alpha, spec));
            reports.push_back(dunkl::master_check_sym(k, lambda, mu, alpha, spec));
            return emit_reports(reports, out);
        }
        if (vops->parsed()) {
            std::vector<CheckReport> reports = dunkl::operator_transform_check(k, spec);
            for (auto& r : dunkl::adjointness_check(k, spec)) reports.push_back(std::move(r));
            return emit_reports(reports, out);
        }
        if (vplan->parsed()) {
            std::vector<CheckReport> reports;
            reports.push_back(dunkl::gaussian_norm_check(k, spec));
            for (const auto& [f, g] : plancherel_pairs(k))
                reports.push_back(dunkl::plancherel_check(f, g, k, spec));
            return emit_reports(reports, out);
        }
        if (vinv->parsed()) {
            std::vector<CheckReport> reports = dunkl::inversion_check(k, 4, spec);
            for (auto& r : dunkl::oracle_agreement_check(k, 6, spec)) reports.push_back(std::move(r));
            for (auto& r : dunkl::sym_nonsym_consistency_check(k, spec))
                reports.push_back(std::move(r));
            return emit_reports(reports, out);
        }
        if (trep->parsed()) return run_truncated_report(n, out);
        if (fsuite->parsed()) return run_full_suite(nmax, radius, rel_tol, out);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const dunkl::SingularParameterError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const dunkl::ConvergenceError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const dunkl::TailBoundError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
