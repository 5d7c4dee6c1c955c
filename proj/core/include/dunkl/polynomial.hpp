#pragma once

#include "dunkl/kpolynomial.hpp"
#include "dunkl/rational.hpp"

#include <complex>
#include <sstream>
#include <string>
#include <vector>

namespace dunkl {

/**
 * Glue between the three coefficient modes of the polynomial representation:
 * formal (Q[k]), exact-specialized (Q, k a fixed rational), and numeric
 * (complex double, k a fixed complex number).
 */
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<KPolynomial> {
    static constexpr const char* mode_name = "formal";
    static constexpr bool exact = true;
    static KPolynomial from_long(long v) { return KPolynomial(v); }
    static bool is_zero(const KPolynomial& v) { return v.is_zero(); }
    static std::string to_string(const KPolynomial& v) { return v.to_string(); }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr const char* mode_name = "exact";
    static constexpr bool exact = true;
    static Rational from_long(long v) { return Rational(v); }
    static bool is_zero(const Rational& v) { return v == 0; }
    static std::string to_string(const Rational& v) { return dunkl::to_string(v); }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static constexpr const char* mode_name = "numeric";
    static constexpr bool exact = false;
    static std::complex<double> from_long(long v) { return {static_cast<double>(v), 0.0}; }
    static bool is_zero(const std::complex<double>& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static std::string to_string(const std::complex<double>& v) {
        std::ostringstream os;
        os.precision(17);
        os << v.real();
        if (v.imag() != 0.0) os << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
        return os.str();
    }
};

/**
 * Dense univariate polynomial with coefficients in one of the three scalar
 * modes. Coefficients ascend in degree; trailing zeros are stripped, so the
 * stored leading coefficient is nonzero and zero has an empty list.
 */
template <class S>
class Polynomial {
public:
    using Traits = ScalarTraits<S>;

    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return monomial(0); }
    static Polynomial monomial(unsigned degree, S coeff = Traits::from_long(1)) {
        std::vector<S> c(degree + 1, Traits::from_long(0));
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Traits::from_long(0); }
    const std::vector<S>& coeffs() const { return c_; }
    void set_coeff(std::size_t i, S v) {
        if (i >= c_.size()) c_.resize(i + 1, Traits::from_long(0));
        c_[i] = std::move(v);
        trim();
    }

    template <class Arg>
    Arg evaluate(const Arg& at) const {
        Arg r = at - at; // zero of the argument type
        for (std::size_t i = c_.size(); i-- > 0;) r = r * at + horner_cast<Arg>(c_[i]);
        return r;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> d(c_.size() - 1, Traits::from_long(0));
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Traits::from_long(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    // p(-x)
    Polynomial reflected() const {
        Polynomial r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = Traits::from_long(0) - r.c_[i];
        r.trim();
        return r;
    }

    Polynomial even_part() const {
        Polynomial r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = Traits::from_long(0);
        r.trim();
        return r;
    }

    Polynomial odd_part() const {
        Polynomial r = *this;
        for (std::size_t i = 0; i < r.c_.size(); i += 2) r.c_[i] = Traits::from_long(0);
        r.trim();
        return r;
    }

    bool is_even() const { return odd_part().is_zero(); }
    bool is_odd() const { return even_part().is_zero(); }

    // p / x for p with p(0) = 0 (exact division).
    Polynomial divided_by_x() const {
        if (is_zero()) return {};
        if (!Traits::is_zero(c_[0]))
            throw std::invalid_argument("divided_by_x: constant term is nonzero");
        return Polynomial(std::vector<S>(c_.begin() + 1, c_.end()));
    }

    Polynomial times_x(unsigned power = 1) const {
        if (is_zero()) return {};
        std::vector<S> c(c_.size() + power, Traits::from_long(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + power] = c_[i];
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Traits::from_long(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Traits::from_long(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const S& s) {
        for (auto& ci : c_) ci = ci * s;
        trim();
        return *this;
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& ci : r.c_) ci = Traits::from_long(0) - ci;
        return r;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
    friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, Traits::from_long(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (Traits::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << Traits::to_string(c_[i]) << ")";
            if (i == 1)
                os << "*x";
            else if (i > 1)
                os << "*x^" << i;
        }
        return os.str();
    }

private:
    template <class Arg>
    static Arg horner_cast(const S& v) {
        if constexpr (std::is_same_v<Arg, S>)
            return v;
        else if constexpr (std::is_same_v<S, Rational> && std::is_same_v<Arg, std::complex<double>>)
            return Arg(v.get_d(), 0.0);
        else
            static_assert(std::is_same_v<Arg, S>, "unsupported evaluation argument");
    }

    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
};

using FormalPolynomial = Polynomial<KPolynomial>;
using RationalPolynomial = Polynomial<Rational>;
using NumericPolynomial = Polynomial<std::complex<double>>;

} // namespace dunkl
