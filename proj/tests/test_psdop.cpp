#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knv/knov.hpp"
#include "knv/parser.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using namespace knvtest;

namespace {
const Fixtures& fx() {
    static Fixtures f = Fixtures::builtin();
    return f;
}
WnlOp h0() { return WnlOp::tail(J(1), J(1)); }
}  // namespace

TEST_CASE("composition of weakly non-local operators") {
    // D . u = u D + u1
    LocalOp du = compose(LocalOp::d(), LocalOp::mul(J(0)));
    CHECK(du == LocalOp::monomial(J(0), 1) + LocalOp::mul(J(1)));

    // H0 . H0^{-1} = 1
    CHECK((compose(h0(), WnlOp(fx().H0inv)) - WnlOp(LocalOp::identity())).is_zero());

    // (u1 Dinv u1) . D = u1^2 - u1 Dinv u2
    WnlOp prod = compose(h0(), WnlOp(LocalOp::d()));
    WnlOp expect = WnlOp(LocalOp::mul(J(1) * J(1))) + WnlOp::tail(-J(1), J(2));
    CHECK((prod - expect).is_zero());
}

TEST_CASE("adjoint") {
    CHECK(adjoint(LocalOp::d()) == -LocalOp::d());
    CHECK(adjoint(LocalOp::monomial(J(1), 1)) ==
          -LocalOp::monomial(J(1), 1) - LocalOp::mul(J(2)));
    CHECK((adjoint(h0()) + h0()).is_zero());  // H0 is skew
}

TEST_CASE("canonical form of tail collections") {
    WnlOp a = WnlOp::tail(J(1), J(1)) + WnlOp::tail(RingElem(2) * J(1), J(1));
    CHECK((a - WnlOp::tail(RingElem(3) * J(1), J(1))).is_zero());

    WnlOp b = WnlOp::tail(J(1), J(2)) + WnlOp::tail(J(1), -J(2));
    CHECK(b.is_zero());

    CHECK((h0() + adjoint(h0())).is_zero());
}

TEST_CASE("application to ring elements") {
    CHECK(apply(h0(), RingElem(), {RingElem(1)}) == J(1));
    CHECK(LocalOp::d(2).apply(J(0)) == J(2));
    CHECK_THROWS_AS(apply(h0(), J(2) / (J(1) * J(1)), {RingElem()}), TailIntegrationError);
}

TEST_CASE("derivation of operators") {
    WnlOp expect = WnlOp::tail(J(2), J(1)) + WnlOp::tail(J(1), J(2));
    CHECK((derive_op(EvolGen{J(1)}, h0()) - expect).is_zero());
    CHECK(derive_op(EvolGen{J(0) * J(2)}, WnlOp(LocalOp::d(3))).is_zero());
    Fixtures f = fx();
    CHECK((derive_op(EvolGen{f.G1}, WnlOp(LocalOp::mul(J(0)))) -
           WnlOp(LocalOp::mul(f.G1))).is_zero());
}

TEST_CASE("right Euclidean division") {
    auto [q1, r1] = right_divide(LocalOp::d(2), LocalOp::d());
    CHECK(q1 == LocalOp::d());
    CHECK(r1.is_zero());

    LocalOp b = LocalOp::d() + LocalOp::mul(J(0));
    auto [q2, r2] = right_divide(LocalOp::d(2), b);
    CHECK(q2 == LocalOp::d() - LocalOp::mul(J(0)));
    CHECK(r2 == LocalOp::mul(J(0) * J(0) - J(1)));

    auto [q3, r3] = right_divide(b, b);
    CHECK(q3 == LocalOp::identity());
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(right_divide(b, LocalOp()), DomainError);
}

TEST_CASE("right gcd and the coprimality certificate") {
    CHECK(right_gcd(LocalOp::d(2), LocalOp::d()) == LocalOp::d());

    LocalOp g = LocalOp::d() + LocalOp::mul(J(0));
    LocalOp a = compose(LocalOp::d(), g), b = compose(LocalOp::d() + LocalOp::mul(J(1)), g);
    CHECK_FALSE(right_coprime_certificate(a, g));
    CHECK_FALSE(right_coprime_certificate(a, b));
    CHECK(right_gcd(a, g) == g);
    CHECK(right_gcd(a, b) == g);

    // coprime pair: remainder of D^2 by D + u is the unit u^2 - u1
    CHECK(right_coprime_certificate(LocalOp::d(2), g));
    CHECK(right_gcd(LocalOp::d(2), g).order() == 0);

    // order-0 operand forces a trivial gcd
    LocalOp b0 = compose(LocalOp::mul(J(1).inverse()), LocalOp::d());
    CHECK(right_gcd(LocalOp::mul(J(1)), b0) == LocalOp::identity());
}

TEST_CASE("Wronskian denominators") {
    CHECK(wronskian_denominator({RingElem(1)}) == -LocalOp::d());

    LocalOp b1 = wronskian_denominator({J(1)});
    CHECK(b1.order() == 1);
    CHECK(adjoint(b1).apply(J(1)).is_zero());
    // right-unit equivalent to u1^-1 D
    LocalOp b0 = compose(LocalOp::mul(J(1).inverse()), LocalOp::d());
    auto [q, r] = right_divide(adjoint(b1), adjoint(b0));
    CHECK(r.is_zero());
    CHECK(q.order() == 0);

    LocalOp b2 = wronskian_denominator({J(1), fx().G1});
    CHECK(b2.order() == 2);
    CHECK(adjoint(b2).apply(J(1)).is_zero());
    CHECK(adjoint(b2).apply(fx().G1).is_zero());

    CHECK_THROWS_AS(wronskian_denominator({J(1), RingElem(2) * J(1)}), DegenerateInput);
}

TEST_CASE("fraction extraction") {
    FractionForm fd = fraction_form(WnlOp(LocalOp::d()));
    CHECK(fd.a == LocalOp::d());
    CHECK(fd.b == LocalOp::identity());
    CHECK(fd.coprime);

    FractionForm f0 = fraction_form(h0());
    CHECK(f0.a.order() == 0);
    CHECK(f0.b.order() == 1);
    CHECK(f0.coprime);
    // (A, B) is (u1, u1^-1 D) up to a common right unit
    LocalOp b0 = compose(LocalOp::mul(J(1).inverse()), LocalOp::d());
    auto [q, r] = right_divide(adjoint(f0.b), adjoint(b0));
    REQUIRE(r.is_zero());
    REQUIRE(q.order() == 0);
    CHECK(f0.a == compose(LocalOp::mul(J(1)), adjoint(q)));

    FractionForm f1 = fraction_form(fx().H1);
    CHECK(f1.a.order() == 6);
    CHECK(f1.b.order() == 3);
    CHECK(f1.coprime);
    LocalOp bstar = adjoint(f1.b);
    CHECK(bstar.apply(fx().G1).is_zero());
    CHECK(bstar.apply(fx().G2).is_zero());
    CHECK(bstar.apply(J(1)).is_zero());
}

TEST_CASE("randomized invariants") {
    for (const auto& r : psdop_properties(0x6b6e7631)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.cases >= 100);
        CHECK(r.failures == 0);
    }
}
