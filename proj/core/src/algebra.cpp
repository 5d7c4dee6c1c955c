#include "dunkl/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

// Right-multiplication by x of a normal-form element:
//   x^m d^n s^eps * x = (-1)^eps [ x^{m+1} d^n s^eps + n x^m d^{n-1} s^eps ]
//                     + (odd n) (-1)^eps 2k x^m d^{n-1} s^{1-eps}.
AlgebraElement mul_x(const AlgebraElement& a) {
    static const KPolynomial two_k = KPolynomial(2) * KPolynomial::k();
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms()) {
        KPolynomial signed_c = mono.eps ? -c : c;
        out.add_term({mono.m + 1, mono.n, mono.eps}, signed_c);
        if (mono.n >= 1) {
            out.add_term({mono.m, mono.n - 1, mono.eps}, signed_c * Rational(static_cast<long>(mono.n)));
            if (mono.n % 2 == 1) out.add_term({mono.m, mono.n - 1, 1 - mono.eps}, signed_c * two_k);
        }
    }
    return out;
}

AlgebraElement mul_d(const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms())
        out.add_term({mono.m, mono.n + 1, mono.eps}, mono.eps ? -c : c);
    return out;
}

AlgebraElement mul_s(const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms()) out.add_term({mono.m, mono.n, 1 - mono.eps}, c);
    return out;
}

// a * x^m d^n s^eps
AlgebraElement mul_monomial(AlgebraElement a, const Monomial& mono) {
    for (unsigned i = 0; i < mono.m; ++i) a = mul_x(a);
    for (unsigned i = 0; i < mono.n; ++i) a = mul_d(a);
    if (mono.eps) a = mul_s(a);
    return a;
}

} // namespace

AlgebraElement AlgebraElement::monomial(Monomial mono, KPolynomial coeff) {
    AlgebraElement e;
    e.add_term(mono, coeff);
    return e;
}

void AlgebraElement::add_term(const Monomial& mono, const KPolynomial& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

unsigned AlgebraElement::max_x_degree() const {
    unsigned m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.m);
    return m;
}

unsigned AlgebraElement::max_d_degree() const {
    unsigned n = 0;
    for (const auto& [mono, c] : terms_) n = std::max(n, mono.n);
    return n;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator*=(const KPolynomial& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<Monomial, KPolynomial> scaled;
    for (const auto& [mono, c] : terms_) scaled.emplace(mono, c * s);
    terms_ = std::move(scaled);
    return *this;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ") * x^" << mono.m << " d^" << mono.n << " s^" << mono.eps;
    }
    return os.str();
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(AlgebraElement a, const KPolynomial& s) { return a *= s; }
AlgebraElement operator*(const KPolynomial& s, AlgebraElement a) { return a *= s; }
AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= KPolynomial(s); }
AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= KPolynomial(s); }

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [mono, c] : b.terms()) {
        AlgebraElement part = mul_monomial(a, mono);
        part *= c;
        out += part;
    }
    return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b) - multiply(b, a);
}

AlgebraElement power(const AlgebraElement& a, unsigned n) {
    AlgebraElement r = AlgebraElement::one();
    for (unsigned i = 0; i < n; ++i) r = multiply(r, a);
    return r;
}

AlgebraElement star(const AlgebraElement& a) {
    // (x^m d^n s^eps)* = (s^eps)(-d)^n x^m; reduce the reversed word.
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms()) {
        AlgebraElement w = mono.eps ? AlgebraElement::s() : AlgebraElement::one();
        for (unsigned i = 0; i < mono.n; ++i) w = mul_d(w);
        for (unsigned i = 0; i < mono.m; ++i) w = mul_x(w);
        w *= (mono.n % 2 == 1) ? -c : c;
        out += w;
    }
    return out;
}

AlgebraElement tau(const AlgebraElement& a, const Rational& alpha) {
    AlgebraElement img_d = AlgebraElement::d() - AlgebraElement::x() * (Rational(2) * alpha);
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms()) {
        AlgebraElement w = AlgebraElement::monomial({mono.m, 0, 0});
        for (unsigned i = 0; i < mono.n; ++i) w = multiply(w, img_d);
        if (mono.eps) w = mul_s(w);
        w *= c;
        out += w;
    }
    return out;
}

AlgebraElement sigma(const AlgebraElement& a) {
    // x -> d/2, d -> -2x: image of x^m d^n s^eps is (-1)^n 2^{n-m} d^m x^n s^eps.
    AlgebraElement out;
    for (const auto& [mono, c] : a.terms()) {
        AlgebraElement w = AlgebraElement::monomial({0, mono.m, 0});
        for (unsigned i = 0; i < mono.n; ++i) w = mul_x(w);
        if (mono.eps) w = mul_s(w);
        Rational scale = mono.n % 2 == 0 ? Rational(1) : Rational(-1);
        if (mono.n >= mono.m)
            scale *= rational_pow(Rational(2), mono.n - mono.m);
        else
            scale *= rational_pow(Rational(1, 2), mono.m - mono.n);
        w *= KPolynomial(scale) * c;
        out += w;
    }
    return out;
}

Sl2Triple sl2_triple() {
    Sl2Triple t;
    t.e = AlgebraElement::monomial({2, 0, 0});
    t.f = AlgebraElement::monomial({0, 2, 0}, KPolynomial(make_rational(-1, 4)));
    const AlgebraElement x = AlgebraElement::x();
    const AlgebraElement d = AlgebraElement::d();
    t.h = (multiply(x, d) + multiply(d, x)) * make_rational(1, 2);

    if (commutator(t.h, t.e) != t.e + t.e || commutator(t.h, t.f) != -(t.f + t.f) ||
        commutator(t.e, t.f) != t.h)
        throw std::logic_error("sl2 bracket relations failed");
    return t;
}

} // namespace dunkl
