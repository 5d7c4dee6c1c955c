#pragma once

#include "dunkl/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace dunkl {

/**
 * Polynomial in the formal coupling parameter k with rational coefficients.
 *
 * Coefficients are stored dense, ascending in the power of k, with trailing
 * zeros stripped; the zero polynomial has an empty coefficient list.
 */
class KPolynomial {
public:
    KPolynomial() = default;
    KPolynomial(long value) : c_(value == 0 ? 0 : 1, Rational(value)) {}
    KPolynomial(const Rational& value) {
        if (value != 0) c_.push_back(value);
    }
    explicit KPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    // The generator k itself.
    static KPolynomial k() { return KPolynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(std::size_t power) const {
        static const Rational zero(0);
        return power < c_.size() ? c_[power] : zero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& at) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
        return r;
    }
    std::complex<double> evaluate(const std::complex<double>& at) const {
        std::complex<double> r(0.0, 0.0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * at + c_[i].get_d();
        return r;
    }

    KPolynomial& operator+=(const KPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    KPolynomial& operator-=(const KPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    KPolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& ci : c_) ci *= s;
        return *this;
    }
    KPolynomial& operator*=(const KPolynomial& o) {
        *this = *this * o;
        return *this;
    }
    KPolynomial operator-() const {
        KPolynomial r = *this;
        for (auto& ci : r.c_) ci = -ci;
        return r;
    }

    friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) { return a += b; }
    friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) { return a -= b; }
    friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return KPolynomial();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return KPolynomial(std::move(c));
    }
    friend KPolynomial operator*(KPolynomial a, const Rational& s) { return a *= s; }
    friend KPolynomial operator*(const Rational& s, KPolynomial a) { return a *= s; }

    bool operator==(const KPolynomial& o) const { return c_ == o.c_; }

    // Renders as e.g. "1 + 2*k - 3/2*k^2"; the zero polynomial renders "0".
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace dunkl
