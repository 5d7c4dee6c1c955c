#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/errors.hpp"
#include "dunkl/polyrep.hpp"

#include <complex>
#include <random>

using namespace dunkl;

namespace {

FormalPolynomial random_formal(std::mt19937& rng, unsigned maxdeg) {
    FormalPolynomial p;
    unsigned deg = rng() % (maxdeg + 1);
    for (unsigned i = 0; i <= deg; ++i) {
        long c = static_cast<long>(rng() % 9) - 4;
        if (c != 0) p += FormalPolynomial::monomial(i, KPolynomial(c));
    }
    return p;
}

AlgebraElement random_element(std::mt19937& rng, unsigned max_len) {
    AlgebraElement out = AlgebraElement::one();
    unsigned len = rng() % (max_len + 1);
    for (unsigned i = 0; i < len; ++i) {
        switch (rng() % 3) {
        case 0: out = out * AlgebraElement::x(); break;
        case 1: out = out * AlgebraElement::d(); break;
        default: out = out * AlgebraElement::s(); break;
        }
    }
    return out;
}

} // namespace

TEST_CASE("Dunkl operator on monomials") {
    auto ctx = formal_context();
    // D x^l = (l + (1 - (-1)^l) k) x^{l-1}
    for (unsigned l = 1; l <= 8; ++l) {
        FormalPolynomial image = dunkl_apply(FormalPolynomial::monomial(l), ctx);
        KPolynomial expected_coeff(static_cast<long>(l));
        if (l % 2 == 1) expected_coeff += KPolynomial::k() + KPolynomial::k();
        CHECK(image == FormalPolynomial::monomial(l - 1, expected_coeff));
    }
    CHECK(dunkl_apply(FormalPolynomial::one(), ctx).is_zero());
}

TEST_CASE("[d, x] acts as 1 + 2k s") {
    auto ctx = formal_context();
    AlgebraElement c = commutator(AlgebraElement::d(), AlgebraElement::x());
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 15; ++trial) {
        FormalPolynomial p = random_formal(rng, 7);
        FormalPolynomial lhs = act(c, p, ctx);
        FormalPolynomial refl = reflect(p);
        refl *= KPolynomial::k() + KPolynomial::k();
        CHECK(lhs == p + refl);
    }
}

TEST_CASE("acting is a homomorphism from the algebra") {
    auto ctx = formal_context();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraElement a = random_element(rng, 4);
        AlgebraElement b = random_element(rng, 4);
        FormalPolynomial p = random_formal(rng, 5);
        CHECK(act(a * b, p, ctx) == act(a, act(b, p, ctx), ctx));
    }
}

TEST_CASE("Euler-type element is diagonal with eigenvalue j + k + 1/2") {
    auto ctx = formal_context();
    Sl2Triple t = sl2_triple();
    for (unsigned j = 0; j <= 8; ++j) {
        FormalPolynomial p = FormalPolynomial::monomial(j);
        KPolynomial eig(make_rational(2 * static_cast<long>(j) + 1, 2));
        eig += KPolynomial::k();
        CHECK(act(t.h, p, ctx) == FormalPolynomial::monomial(j, eig));
    }
}

TEST_CASE("raising and lowering by the sl2 pair") {
    auto ctx = formal_context();
    Sl2Triple t = sl2_triple();
    // e = x^2 raises degree by 2; f = -d^2/4 lowers it by 2
    CHECK(act(t.e, FormalPolynomial::monomial(3), ctx) == FormalPolynomial::monomial(5));
    FormalPolynomial low = act(t.f, FormalPolynomial::monomial(2), ctx);
    CHECK(low == FormalPolynomial::monomial(0, KPolynomial(make_rational(-1, 2)) +
                                                   KPolynomial::k() * make_rational(-1, 1)));
}

TEST_CASE("kernel of the Dunkl operator") {
    auto generic = exact_context(make_rational(1, 3));
    auto basis = dunkl_kernel_basis(generic, 9);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RationalPolynomial::one());

    auto special = exact_context(make_rational(-5, 2)); // n = 2
    basis = dunkl_kernel_basis(special, 9);
    REQUIRE(basis.size() == 2);
    CHECK(basis[1] == RationalPolynomial::monomial(5));
    CHECK(dunkl_apply(basis[1], special).is_zero());
}

TEST_CASE("exp(D^2/4) by hand on small monomials") {
    auto ctx = formal_context();
    // x^2 -> x^2 + (1 + 2k)/2
    FormalPolynomial got = exp_half_d_squared(FormalPolynomial::monomial(2), ctx);
    FormalPolynomial expected = FormalPolynomial::monomial(2);
    expected += FormalPolynomial::monomial(
        0, KPolynomial(make_rational(1, 2)) + KPolynomial::k());
    CHECK(got == expected);

    // x^3 -> x^3 + (3/2 + k) x  (D^2 x^3 = 2(3+2k) x)
    got = exp_half_d_squared(FormalPolynomial::monomial(3), ctx);
    expected = FormalPolynomial::monomial(3);
    expected += FormalPolynomial::monomial(
        1, KPolynomial(make_rational(3, 2)) + KPolynomial::k());
    CHECK(got == expected);

    // the two signs invert each other
    std::mt19937 rng(606);
    for (int trial = 0; trial < 10; ++trial) {
        FormalPolynomial p = random_formal(rng, 6);
        CHECK(exp_half_d_squared(exp_half_d_squared(p, ctx, 1), ctx, -1) == p);
    }
}

TEST_CASE("x^{2n+1} generates a submodule at k = -(2n+1)/2") {
    const unsigned n = 1;
    auto ctx = exact_context(make_rational(-3, 2));
    for (unsigned extra = 0; extra <= 3; ++extra) {
        RationalPolynomial p = RationalPolynomial::monomial(2 * n + 1 + extra);
        CHECK(submodule_membership(p, n));
        CHECK(submodule_membership(dunkl_apply(p, ctx), n));
        CHECK(submodule_membership(p.times_x(), n));
        CHECK(submodule_membership(reflect(p), n));
    }
    // and the quotient sees x^{2n} killed by nothing but x-multiplication
    CHECK_FALSE(submodule_membership(RationalPolynomial::monomial(2 * n), n));
}

TEST_CASE("numeric mode matches exact mode away from poles") {
    auto exact = exact_context(make_rational(2, 3));
    auto numeric = numeric_context(std::complex<double>(2.0 / 3.0, 0.0));
    std::mt19937 rng(11);
    AlgebraElement a = random_element(rng, 5);
    for (unsigned j = 0; j <= 5; ++j) {
        RationalPolynomial pe = RationalPolynomial::monomial(j);
        NumericPolynomial pn = NumericPolynomial::monomial(j);
        RationalPolynomial qe = act(a, pe, exact);
        NumericPolynomial qn = act(a, pn, numeric);
        CHECK(qn.degree() <= qe.degree());
        for (int i = 0; i <= qe.degree(); ++i) {
            std::complex<double> ne = i <= qn.degree() ? qn.coeff(i) : 0.0;
            CHECK(std::abs(ne - to_double(qe.coeff(i))) < 1e-12 * (1.0 + std::abs(ne)));
        }
    }
}

TEST_CASE("numeric mode refuses couplings at the poles") {
    CHECK_THROWS_AS(require_regular_numeric_k({-0.5, 0.0}, 3), SingularParameterError);
    CHECK_THROWS_AS(require_regular_numeric_k({-2.5 + 1e-12, 0.0}, 4), SingularParameterError);
    CHECK_NOTHROW(require_regular_numeric_k({0.25, 0.0}, 10));
    auto bad = numeric_context(std::complex<double>(-1.5, 0.0));
    CHECK_THROWS_AS(dunkl_apply(NumericPolynomial::monomial(4), bad), SingularParameterError);
}
