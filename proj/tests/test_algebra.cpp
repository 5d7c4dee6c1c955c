#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/algebra.hpp"
#include "dunkl/polyrep.hpp"

#include <map>
#include <random>
#include <vector>

using namespace dunkl;

namespace {

enum Gen : int { GX = 0, GD = 1, GS = 2 };

KPolynomial two_k() { return KPolynomial::k() + KPolynomial::k(); }

// Reference normalizer, independent of the PBW engine: apply the relations
// dx = xd + 1 + 2ks, sx = -xs, sd = -ds, ss = 1 literally, branching on the
// first descent until every word is x^m d^n s^eps.
void normalize_word(const std::vector<int>& w, const KPolynomial& coeff,
                    std::map<Monomial, KPolynomial>& acc) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int a = w[i], b = w[i + 1];
        if (a == GD && b == GX) {
            std::vector<int> swapped = w;
            swapped[i] = GX;
            swapped[i + 1] = GD;
            normalize_word(swapped, coeff, acc);
            std::vector<int> dropped(w.begin(), w.begin() + i);
            dropped.insert(dropped.end(), w.begin() + i + 2, w.end());
            normalize_word(dropped, coeff, acc);
            std::vector<int> with_s = dropped;
            with_s.insert(with_s.begin() + i, GS);
            normalize_word(with_s, coeff * two_k(), acc);
            return;
        }
        if (a == GS && (b == GX || b == GD)) {
            std::vector<int> swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            normalize_word(swapped, -coeff, acc);
            return;
        }
        if (a == GS && b == GS) {
            std::vector<int> dropped(w.begin(), w.begin() + i);
            dropped.insert(dropped.end(), w.begin() + i + 2, w.end());
            normalize_word(dropped, coeff, acc);
            return;
        }
    }
    Monomial mono;
    for (int g : w) {
        if (g == GX) ++mono.m;
        if (g == GD) ++mono.n;
        if (g == GS) mono.eps ^= 1;
    }
    acc[mono] += coeff;
}

AlgebraElement oracle_normal_form(const std::vector<int>& word) {
    std::map<Monomial, KPolynomial> acc;
    normalize_word(word, KPolynomial(1), acc);
    AlgebraElement out;
    for (const auto& [mono, c] : acc) out.add_term(mono, c);
    return out;
}

AlgebraElement element_from_word(const std::vector<int>& word) {
    AlgebraElement out = AlgebraElement::one();
    for (int g : word) {
        if (g == GX) out = out * AlgebraElement::x();
        if (g == GD) out = out * AlgebraElement::d();
        if (g == GS) out = out * AlgebraElement::s();
    }
    return out;
}

std::vector<int> random_word(std::mt19937& rng, unsigned max_len) {
    std::vector<int> w(rng() % (max_len + 1));
    for (auto& g : w) g = static_cast<int>(rng() % 3);
    return w;
}

} // namespace

TEST_CASE("defining relations hold in normal form") {
    AlgebraElement x = AlgebraElement::x(), d = AlgebraElement::d(), s = AlgebraElement::s();
    CHECK(s * s == AlgebraElement::one());
    CHECK(s * x == -(x * s));
    CHECK(s * d == -(d * s));

    AlgebraElement expected = AlgebraElement::one();
    expected.add_term({0, 0, 1}, two_k());
    CHECK(commutator(d, x) == expected);
    CHECK(expected.to_string() == "(1) * x^0 d^0 s^0 + (2*k) * x^0 d^0 s^1");
}

TEST_CASE("products agree with the literal rewrite oracle on random words") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<int> w = random_word(rng, 7);
        CAPTURE(trial);
        CHECK(element_from_word(w) == oracle_normal_form(w));
    }
}

TEST_CASE("product of normal forms matches concatenated-word normalization") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> wa = random_word(rng, 5);
        std::vector<int> wb = random_word(rng, 5);
        std::vector<int> wab = wa;
        wab.insert(wab.end(), wb.begin(), wb.end());
        CHECK(element_from_word(wa) * element_from_word(wb) == oracle_normal_form(wab));
    }
}

TEST_CASE("(xd)^2 normal form") {
    AlgebraElement xd = AlgebraElement::x() * AlgebraElement::d();
    AlgebraElement sq = xd * xd;
    AlgebraElement expected;
    expected.add_term({2, 2, 0}, KPolynomial(1));
    expected.add_term({1, 1, 0}, KPolynomial(1));
    expected.add_term({1, 1, 1}, -two_k());
    CHECK(sq == expected);

    // cross-check through the polynomial action: (xd)^2 x^2 = 4 x^2
    auto ctx = formal_context();
    auto p = FormalPolynomial::monomial(2);
    auto image = act(sq, p, ctx);
    FormalPolynomial four_p = p;
    four_p *= KPolynomial(4);
    CHECK(image == four_p);
}

TEST_CASE("associativity on random elements") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
        AlgebraElement a = element_from_word(random_word(rng, 4));
        AlgebraElement b = element_from_word(random_word(rng, 4));
        AlgebraElement c = element_from_word(random_word(rng, 4));
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("star is an anti-involution fixing x and s and negating d") {
    CHECK(star(AlgebraElement::x()) == AlgebraElement::x());
    CHECK(star(AlgebraElement::s()) == AlgebraElement::s());
    CHECK(star(AlgebraElement::d()) == -AlgebraElement::d());

    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraElement a = element_from_word(random_word(rng, 5));
        AlgebraElement b = element_from_word(random_word(rng, 5));
        CHECK(star(a * b) == star(b) * star(a));
        CHECK(star(star(a)) == a);
    }
}

TEST_CASE("tau is a one-parameter automorphism group") {
    Rational alpha = make_rational(1, 2), beta = make_rational(-1, 3);
    AlgebraElement d = AlgebraElement::d();
    AlgebraElement expected = d - AlgebraElement::x() * (alpha + alpha);
    CHECK(tau(d, alpha) == expected);
    CHECK(tau(AlgebraElement::x(), alpha) == AlgebraElement::x());
    CHECK(tau(AlgebraElement::s(), alpha) == AlgebraElement::s());

    std::mt19937 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement a = element_from_word(random_word(rng, 5));
        AlgebraElement b = element_from_word(random_word(rng, 5));
        CHECK(tau(a * b, alpha) == tau(a, alpha) * tau(b, alpha));
        CHECK(tau(tau(a, alpha), beta) == tau(a, alpha + beta));
        CHECK(tau(a, Rational(0)) == a);
        CHECK(tau(tau(a, alpha), -alpha) == a);
    }
}

TEST_CASE("sigma is an order-4 automorphism rotating x and d") {
    AlgebraElement x = AlgebraElement::x(), d = AlgebraElement::d(), s = AlgebraElement::s();
    CHECK(sigma(x) == d * make_rational(1, 2));
    CHECK(sigma(d) == -(x * Rational(2)));
    CHECK(sigma(s) == s);
    CHECK(sigma(sigma(x)) == -x);
    CHECK(sigma(sigma(d)) == -d);

    std::mt19937 rng(31415);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement a = element_from_word(random_word(rng, 5));
        AlgebraElement b = element_from_word(random_word(rng, 5));
        CHECK(sigma(a * b) == sigma(a) * sigma(b));
        CHECK(sigma(sigma(sigma(sigma(a)))) == a);
    }
}

TEST_CASE("sl2 triple satisfies the bracket relations") {
    Sl2Triple t = sl2_triple();
    CHECK(t.e == AlgebraElement::x() * AlgebraElement::x());
    AlgebraElement half_comm = AlgebraElement::one();
    half_comm.add_term({0, 0, 1}, two_k());
    AlgebraElement h_formula =
        AlgebraElement::x() * AlgebraElement::d() + half_comm * make_rational(1, 2);
    CHECK(t.h == h_formula);
    CHECK(commutator(t.h, t.e) == t.e * Rational(2));
    CHECK(commutator(t.h, t.f) == t.f * Rational(-2));
    CHECK(commutator(t.e, t.f) == t.h);
}

TEST_CASE("power matches repeated multiplication") {
    AlgebraElement a = AlgebraElement::x() + AlgebraElement::d();
    CHECK(power(a, 0) == AlgebraElement::one());
    CHECK(power(a, 3) == a * a * a);
}

TEST_CASE("nonzero elements act nontrivially on low-degree monomials") {
    auto ctx = formal_context();
    std::mt19937 rng(8080);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement a = element_from_word(random_word(rng, 5));
        if (a.is_zero()) continue;
        bool hits = false;
        unsigned bound = a.max_d_degree() + 3;
        for (unsigned j = 0; j <= bound && !hits; ++j)
            if (!act(a, FormalPolynomial::monomial(j), ctx).is_zero()) hits = true;
        CHECK(hits);
    }
}

TEST_CASE("rendering is stable") {
    CHECK(AlgebraElement::zero().to_string() == "0");
    AlgebraElement a = AlgebraElement::x() * AlgebraElement::d() * AlgebraElement::s();
    CHECK(a.to_string() == "(1) * x^1 d^1 s^1");
}
