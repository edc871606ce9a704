#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knv/parser.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using namespace knvtest;

TEST_CASE("normalization reduces to the unique canonical form") {
    Poly u1sq = Poly::variable(VarId::jet(0, 1), 2);
    CHECK(normalize(u1sq - u1sq, Poly::variable(VarId::jet(0, 2))).is_zero());

    Poly u1 = Poly::variable(VarId::jet(0, 1)), u2 = Poly::variable(VarId::jet(0, 2));
    CHECK(normalize(u1 * u2, u1) == J(2));

    Poly u = Poly::variable(VarId::jet(0, 0)), one{Coeff(1)};
    CHECK(normalize(u * u - one, u - one) == J(0) + RingElem(1));

    CHECK_THROWS_AS(RingElem(u1, Poly()), DomainError);
}

TEST_CASE("total derivative: quotient rule, Leibniz, chain rule on P") {
    CHECK(total_derivative(J(1).inverse()) == -J(2) * J(1).pow(-2));
    CHECK(total_derivative(J(0) * J(1)) == J(1) * J(1) + J(0) * J(2));
    CHECK(total_derivative(PolyP::P()) == PolyP::Pu() * J(1));
    CHECK(total_derivative(J(0), 3) == J(3));
}

TEST_CASE("the distinguished quartic P and its u-derivatives") {
    CHECK(PolyP::deriv(0) == PolyP::P());
    CHECK(PolyP::deriv(1) == PolyP::Pu());
    CHECK(PolyP::deriv(2) == PolyP::Puu());
    CHECK(PolyP::deriv(3) == PolyP::Puuu());
    CHECK(PolyP::deriv(4) == PolyP::Puuuu());
    CHECK(PolyP::deriv(5).is_zero());
    CHECK(partial_derivative(PolyP::P(), VarId::jet(0, 0)) == PolyP::Pu());
}

TEST_CASE("partial derivatives") {
    RingElem e = J(2) * J(2) / J(1);
    CHECK(partial_derivative(e, VarId::jet(0, 2)) == RingElem(2) * J(2) / J(1));
    CHECK(partial_derivative(PolyP::P() / J(1), VarId::jet(0, 0)) == PolyP::Pu() / J(1));
    CHECK(partial_derivative(J(3), VarId::jet(0, 2)).is_zero());
}

TEST_CASE("differential order") {
    RingElem g1 = parse("u3 - 3/2*u2^2/u1 + P/u1");
    CHECK(diff_order(g1) == 3);
    CHECK(diff_order(J(0)) == 0);
    CHECK_FALSE(diff_order(RingElem::var(kParamP[3])).has_value());
    CHECK_THROWS_AS(diff_order(RingElem::var(VarId::jet(1, 0))), DomainError);
}

TEST_CASE("exact evaluation over the rationals") {
    std::map<VarId, Coeff> pt{{VarId::jet(0, 1), Coeff(2)}, {VarId::jet(0, 2), Coeff(6)}};
    CHECK(evaluate(J(2) / J(1), pt) == Coeff(3));

    std::map<VarId, Coeff> pz{{VarId::jet(0, 0), Coeff(0)}, {kParamP[0], Coeff(5)}};
    for (int i = 1; i < 5; ++i) pz[kParamP[unsigned(i)]] = Coeff(0);
    CHECK(evaluate(PolyP::P(), pz) == Coeff(5));

    std::map<VarId, Coeff> sing{{VarId::jet(0, 1), Coeff(0)}};
    CHECK_THROWS_AS(evaluate(J(1).inverse(), sing), EvaluationError);
}

TEST_CASE("exact and probabilistic zero tests on hand-checked elements") {
    CHECK((total_derivative(J(0) * J(1)) - J(1) * J(1) - J(0) * J(2)).is_zero());
    CHECK_FALSE(J(1).is_zero());
    std::mt19937_64 rng(0x6b6e7631);
    CHECK(is_zero_probabilistic(total_derivative(J(0) * J(1)) - J(1) * J(1) - J(0) * J(2), 40, rng));
    CHECK_FALSE(is_zero_probabilistic(J(1), 40, rng));
}

TEST_CASE("parallel polynomial kernels match the serial references") {
    Rand rd(2024);
    for (int i = 0; i < 100; ++i) {
        Poly a = rd.poly(3, 4, 3, true), b = rd.poly(3, 4, 3, true);
        Poly ref = kernels::mul_serial(a, b);
        CHECK(kernels::mul_parallel(a, b) == ref);
        CHECK(a * b == ref);
    }
    Poly p = rd.poly(2, 5, 3, true);
    std::vector<std::map<uint32_t, uint64_t>> points;
    for (int i = 0; i < 64; ++i) {
        std::map<uint32_t, uint64_t> pt;
        for (VarId v : p.vars()) pt[v.raw] = uint64_t(rd.integer(1, 1 << 30));
        points.push_back(std::move(pt));
    }
    CHECK(kernels::eval_batch_parallel(p, points) == kernels::eval_batch_serial(p, points));
}

TEST_CASE("randomized invariants") {
    for (const auto& r : diffring_properties(0x6b6e7631)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.cases >= 100);
        CHECK(r.failures == 0);
    }
}
