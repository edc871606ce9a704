#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knv/knov.hpp"
#include "knv/parser.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using namespace knvtest;

namespace {
RingElem g1() { return parse("u3 - 3/2*u2^2/u1 + P/u1"); }
}  // namespace

TEST_CASE("Frechet derivative") {
    CHECK(frechet(J(1)) == LocalOp::d());
    CHECK(frechet(J(0) * J(0)) == LocalOp::mul(RingElem(2) * J(0)));

    LocalOp d = frechet(g1());
    REQUIRE(d.order() == 3);
    CHECK(d.coeff(3) == RingElem(1));
    CHECK(d.coeff(2) == RingElem(-3) * J(2) / J(1));
    CHECK(d.coeff(1) == RingElem(rat(3, 2)) * J(2) * J(2) / (J(1) * J(1)) -
                            PolyP::P() / (J(1) * J(1)));
    CHECK(d.coeff(0) == PolyP::Pu() / J(1));
}

TEST_CASE("variational derivative") {
    CHECK(variational_derivative(J(1) * J(1) * RingElem(rat(1, 2))) == -J(2));
    CHECK(variational_derivative(J(2) / J(1)).is_zero());
    Rand rd(7);
    for (int i = 0; i < 20; ++i)
        CHECK(variational_derivative(total_derivative(rd.elem1(3, 3))).is_zero());
}

TEST_CASE("evolutionary derivations") {
    RingElem f = J(0) * J(2) + J(1);
    CHECK(evol_apply(EvolGen{f}, J(0)) == f);
    CHECK(evol_apply(EvolGen{g1()}, J(2)) == total_derivative(g1(), 2));
}

TEST_CASE("Lie bracket") {
    CHECK(lie_bracket(J(1), g1()).is_zero());
    CHECK(lie_bracket(J(0), J(0) * J(0)) == J(0) * J(0));
    Fixtures fx = Fixtures::builtin();
    CHECK(lie_bracket(fx.G1, fx.G2).is_zero());
}

TEST_CASE("operator-coefficient Frechet derivative") {
    CHECK(op_frechet(LocalOp::mul(J(0)), RingElem(1)) == LocalOp::identity());
    CHECK(op_frechet(LocalOp::d(), J(0) * J(1)).is_zero());
    CHECK(op_frechet(compose(LocalOp::mul(J(1)), LocalOp::d()), RingElem(1)).is_zero());
}

TEST_CASE("Helmholtz criterion") {
    CHECK(is_variational(J(2)));
    CHECK_FALSE(is_variational(J(1)));
    RingElem psi1 = J(1).inverse() * total_derivative(g1() / J(1));
    CHECK(is_variational(psi1));
}

TEST_CASE("inverse total derivative") {
    Integration i = integrate_total_derivative(J(1) * J(2));
    REQUIRE(i.ok());
    CHECK(i.value == J(1) * J(1) * RingElem(rat(1, 2)));

    CHECK(integrate_total_derivative(J(1) * J(1)).status ==
          Integration::Status::not_total_derivative);
    CHECK(integrate_total_derivative(J(2) / J(1)).status == Integration::Status::logarithmic);
}

TEST_CASE("univariate integration") {
    VarId u1 = VarId::jet(0, 1);
    UnivIntegration a = integrate_univariate(J(1) * J(1), u1);
    CHECK_FALSE(a.logarithmic);
    CHECK(a.value == J(1).pow(3) / RingElem(3));
    CHECK(integrate_univariate(J(1).inverse(), u1).logarithmic);
}

TEST_CASE("randomized invariants") {
    for (const auto& r : varcalc_properties(0x6b6e7631)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.cases >= 100);
        CHECK(r.failures == 0);
    }
}
