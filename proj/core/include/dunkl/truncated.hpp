#pragma once

#include "dunkl/bessel.hpp"
#include "dunkl/rational.hpp"

#include <string>
#include <vector>

namespace dunkl {

// Dense matrix over Q, just enough linear algebra for the finite modules.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    QMatrix transpose() const {
        QMatrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& s);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
    friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend std::vector<Rational> operator*(const QMatrix& a, const std::vector<Rational>& v);
    bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// sum_m A^m / m! for nilpotent A (terminates when a power vanishes).
QMatrix nilpotent_exp(const QMatrix& a);

/**
 * The 2n+1 dimensional module C[x]/(x^{2n+1}) at the half-integral coupling
 * k = -n - 1/2, with the generator actions as exact matrices on the monomial
 * basis {1, x, ..., x^{2n}}.
 */
struct TruncatedModule {
    unsigned n = 0;
    QMatrix X, D, S;
    std::size_t dim() const { return 2 * n + 1; }
    Rational k() const { return make_rational(-(2 * static_cast<long>(n) + 1), 2); }
};

// Builds the module and verifies the defining relations, nilpotency and the
// diagonal reflection at construction (throws std::logic_error on failure).
TruncatedModule build_truncated(unsigned n);

// Truncated Gaussians gamma_{sign} = sum_m (sign x^2)^m / m!.
QMatrix gaussian_matrix(unsigned n, int sign);

// exp(sign D^2/4) as a finite nilpotent exponential.
QMatrix exp_d2_quarter(unsigned n, int sign);

// More general nilpotent exponentials used by the factorization report.
QMatrix gaussian_matrix_scaled(unsigned n, const Rational& coeff);   // exp(coeff x^2)
QMatrix exp_d2_scaled(unsigned n, const Rational& coeff);            // exp(coeff D^2)

/**
 * Truncated Hankel transform F = gamma_+ exp(D^2/4) gamma_+; the intertwining
 * relations F D = -2X F, F 2X = D F, F S = S F are verified at construction.
 */
QMatrix hankel_matrix(unsigned n);

// Kernel psi_lambda(x) = sum_l x^{2n-l} (F x^l)(lambda) as a coefficient
// matrix c(l, m) of x^l lambda^m; diagonal with c(l,l) the g_n coefficients.
struct TruncatedKernel {
    unsigned n = 0;
    QMatrix c;
};

TruncatedKernel truncated_kernel(unsigned n);

// F_+(f)(lambda) = Res(f(x) psi_lambda(x) x^{-2n-1}) in the monomial basis.
std::vector<Rational> f_plus(unsigned n, const std::vector<Rational>& f);
// F_-(g)(x) = Res(g(lambda) psi_x(-lambda) lambda^{-2n-1}).
std::vector<Rational> f_minus(unsigned n, const std::vector<Rational>& g);

// <f, g>_+ = Res(f g x^{-2n-1}) = sum_l f_l g_{2n-l}.
Rational residue_pair(unsigned n, const std::vector<Rational>& f, const std::vector<Rational>& g);
// <f, g>_- = Res(f(lambda) g(-lambda) lambda^{-2n-1}) = sum_l (-1)^l f_l g_{2n-l}.
Rational residue_pair_minus(unsigned n, const std::vector<Rational>& f,
                            const std::vector<Rational>& g);

struct TruncatedCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// <F_+ f, F_+ g>_- = (-1)^n <f, g>_+ over all monomial pairs, exactly.
TruncatedCheck plancherel_truncated(unsigned n);

// Gram G (antidiagonal): G X = X^T G, G D = -D^T G, G S = S^T G, exactly.
std::vector<TruncatedCheck> star_invariance_check(unsigned n);

// e = X^2, f = -D^2/4, h = (XD+DX)/2: bracket relations, h = diag(j - n),
// and the even-subspace spectrum {-n, -n+2, ..., n}.
std::vector<TruncatedCheck> sl2_structure_check(unsigned n);

// F_- F_+ = (-1)^n id = F_+ F_- over the monomial basis.
TruncatedCheck inversion_truncated(unsigned n);

// The intertwiner equations pin F up to one scalar: exact nullspace dim 1.
TruncatedCheck uniqueness_check(unsigned n);

// Coordinate spans invariant under {X, D, S} are only 0 and the whole module.
TruncatedCheck invariant_subspace_check(unsigned n);

// Informational: which rescaled factorizations of F hold as exact matrices.
std::vector<TruncatedCheck> braid_variant_report(unsigned n);

// Informational: the kernel constant term is (-1)^n n! (not -n! for even n).
TruncatedCheck kernel_normalization_report(unsigned n);

// Stable JSON dump of the module, transform, kernel and all check flags.
std::string truncated_module_json(unsigned n);

} // namespace dunkl
