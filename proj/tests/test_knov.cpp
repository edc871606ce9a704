#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

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
}  // namespace

TEST_CASE("built-in fixtures are self-consistent") {
    const Fixtures& f = fx();
    CHECK(f.G0 == J(1));
    for (int i = 0; i < 4; ++i) CHECK(diff_order(f.symmetries()[size_t(i)]) == 2 * i + 1);
    CHECK(f.H0inv == compose(compose(LocalOp::mul(J(1).inverse()), LocalOp::d()),
                             LocalOp::mul(J(1).inverse())));
    CHECK(f.L4.local_order() == 4);
    CHECK(f.L6.local_order() == 6);
    CHECK((compose(f.H0, WnlOp(f.H0inv)) - WnlOp(LocalOp::identity())).is_zero());
    CHECK(f.checksum.size() == 16);
}

TEST_CASE("fixture file round trips through the loader") {
    Fixtures loaded = Fixtures::load_file(KNV_FIXTURE_FILE);
    const Fixtures& b = fx();
    CHECK(loaded.checksum == b.checksum);
    CHECK(loaded.G3 == b.G3);
    CHECK((loaded.H2 - b.H2).is_zero());
    CHECK((loaded.L4 - b.L4).is_zero());
}

TEST_CASE("identity residuals on hand-checked instances") {
    // constant-coefficient operators commute with D_{u1} = D
    CHECK(recursion_residual(WnlOp(LocalOp::d()), J(1)).is_zero());
    CHECK_FALSE(recursion_residual(fx().L4, J(0) * J(0)).is_zero());

    CHECK(hamiltonian_residual(fx().H0, J(1)).is_zero());
    CHECK_FALSE(hamiltonian_residual(fx().H0, J(2)).is_zero());

    LocalOp b0 = compose(LocalOp::mul(J(1).inverse()), LocalOp::d());
    CHECK(fraction_identity_residual(LocalOp::d(), LocalOp::identity(), J(1)).is_zero());
    CHECK(fraction_identity_residual(LocalOp::mul(J(1)), b0, fx().G1).is_zero());

    CHECK(bidifferential_residual(LocalOp::mul(J(1)), b0).is_zero());
    CHECK(bidifferential_residual(LocalOp::d(), LocalOp::identity()).is_zero());
    CHECK_FALSE(bidifferential_residual(LocalOp::mul(J(0)), LocalOp::identity()).is_zero());
}

TEST_CASE("hamiltonian roots via H0^{-1}") {
    HamiltonianRoot r0 = hamiltonian_root(fx().H0inv, fx().G0);
    CHECK(r0.psi.is_zero());
    CHECK(r0.helmholtz);

    CHECK(hamiltonian_root(fx().H0inv, fx().G1).helmholtz);
    CHECK_FALSE(hamiltonian_root(fx().H0inv, J(2)).helmholtz);
}

TEST_CASE("hierarchy generation") {
    // L4(G0) lands in span{G0, G1, G2} with a nonzero G2 component, for any
    // choice of the tail integration constants
    auto s0 = solve_constant_span(next_symmetry(fx().L4, fx().G0),
                                  {fx().G0, fx().G1, fx().G2});
    REQUIRE(s0.has_value());
    CHECK_FALSE((*s0)[2].is_zero());
    std::vector<RingElem> ones(fx().L4.tails.size(), RingElem(1));
    RingElem k0 = next_symmetry(fx().L4, fx().G0, ones);
    CHECK(solve_constant_span(k0, {fx().G0, fx().G1, fx().G2}).has_value());

    RingElem k = next_symmetry(fx().L4, fx().G1);
    auto span = solve_constant_span(k, fx().symmetries());
    REQUIRE(span.has_value());
    CHECK_FALSE((*span)[3].is_zero());
    // exact confirmation of the span decomposition
    RingElem recon;
    for (size_t i = 0; i < 4; ++i) recon += (*span)[i] * fx().symmetries()[i];
    CHECK(k == recon);
}

TEST_CASE("constant-span solving") {
    CHECK(*solve_constant_span(RingElem(3) * J(1), {J(1)}) == std::vector<RingElem>{RingElem(3)});
    auto c = solve_constant_span(fx().G1 + RingElem(2) * J(1), {J(1), fx().G1});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == RingElem(2));
    CHECK((*c)[1] == RingElem(1));
    CHECK_FALSE(solve_constant_span(J(0) * J(0), {J(1)}).has_value());
}

TEST_CASE("check runner contract") {
    RunMode exact;
    auto skew = run_check("skew", fx(), exact);
    CHECK(skew.size() == 3);
    CHECK(all_passed(skew));
    for (const auto& r : skew) {
        CHECK(r.check == "skew");
        CHECK(r.mode == "exact");
        CHECK(r.fixture_checksum == fx().checksum);
    }

    auto densities = run_check("densities", fx(), exact);
    CHECK(densities.size() == 3);
    CHECK(all_passed(densities));

    RunMode prob;
    prob.probabilistic = true;
    auto commute = run_check("commute", fx(), prob);
    CHECK(commute.size() == 6);
    CHECK(all_passed(commute));
    for (const auto& r : commute) CHECK(r.mode == "probabilistic(40)");

    CHECK_THROWS_AS(run_check("no-such-check", fx(), exact), DomainError);
}

TEST_CASE("the full run is ordered by check id") {
    RunMode prob;
    prob.probabilistic = true;
    auto all = run_check("all", fx(), prob);
    CHECK(all.size() == 36);
    CHECK(all_passed(all));
    std::vector<std::string> ids;
    for (const auto& r : all) ids.push_back(r.check);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("randomized invariants") {
    for (const auto& r : knov_properties(0x6b6e7631)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.cases >= 100);
        CHECK(r.failures == 0);
    }
}
