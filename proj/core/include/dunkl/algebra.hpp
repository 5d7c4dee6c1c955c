#pragma once

#include "dunkl/kpolynomial.hpp"

#include <compare>
#include <map>
#include <string>

namespace dunkl {

// Normal-form basis word x^m d^n s^eps.
struct Monomial {
    unsigned m = 0;
    unsigned n = 0;
    unsigned eps = 0;
    auto operator<=>(const Monomial&) const = default;
};

/**
 * Element of the rank-one rational degenerate double affine Hecke algebra
 *
 *     < d, x, s | s^2 = 1, sxs = -x, sds = -d, [d, x] = 1 + 2ks >,
 *
 * kept in PBW normal form: a finite Q[k]-linear combination of x^m d^n s^eps.
 * Products are reduced with the rewrite rules
 *
 *     dx -> xd + 1 + 2ks,   sx -> -xs,   sd -> -ds,   ss -> 1.
 */
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return monomial({0, 0, 0}); }
    static AlgebraElement x() { return monomial({1, 0, 0}); }
    static AlgebraElement d() { return monomial({0, 1, 0}); }
    static AlgebraElement s() { return monomial({0, 0, 1}); }
    static AlgebraElement monomial(Monomial mono, KPolynomial coeff = KPolynomial(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, KPolynomial>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    unsigned max_x_degree() const;
    unsigned max_d_degree() const;

    // Adds coeff * x^m d^n s^eps, dropping the entry if it cancels.
    void add_term(const Monomial& mono, const KPolynomial& coeff);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator-() const;
    AlgebraElement& operator*=(const KPolynomial& s);

    bool operator==(const AlgebraElement&) const = default;

    // Canonical rendering, terms in (m, n, eps) order:
    //   "(1 + 2*k) * x^0 d^0 s^1" joined with " + "; zero renders "0".
    std::string to_string() const;

private:
    std::map<Monomial, KPolynomial> terms_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(AlgebraElement a, const KPolynomial& s);
AlgebraElement operator*(const KPolynomial& s, AlgebraElement a);
AlgebraElement operator*(AlgebraElement a, const Rational& s);
AlgebraElement operator*(const Rational& s, AlgebraElement a);

// PBW product; also available as operator*.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement power(const AlgebraElement& a, unsigned n);

// Anti-involution fixing x, s, and k, sending d to -d (reverses products).
AlgebraElement star(const AlgebraElement& a);

// Automorphism x -> x, s -> s, d -> d - 2*alpha*x.
AlgebraElement tau(const AlgebraElement& a, const Rational& alpha);

// Order-4 automorphism x -> d/2, d -> -2x, s -> s.
AlgebraElement sigma(const AlgebraElement& a);

struct Sl2Triple {
    AlgebraElement e; // x^2
    AlgebraElement f; // -d^2/4
    AlgebraElement h; // (xd + dx)/2
};

// Returns {e, f, h} with [h,e] = 2e, [h,f] = -2f, [e,f] = h verified exactly;
// throws std::logic_error if verification fails.
Sl2Triple sl2_triple();

} // namespace dunkl
