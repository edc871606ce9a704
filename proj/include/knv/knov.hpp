#pragma once

#include <map>

#include "knv/linalg.hpp"
#include "knv/psdop.hpp"
#include "knv/report.hpp"

namespace knv {

// The operators and hierarchy members of the Krichever-Novikov equation:
// symmetries G0..G3, Hamiltonian operators H0..H2, H0^{-1} = u1^{-1} D u1^{-1}
// (local), and the recursion operators L4 = H1 H0^{-1}, L6 = H2 H0^{-1}.
struct Fixtures {
    RingElem G0, G1, G2, G3;
    WnlOp H0, H1, H2;
    LocalOp H0inv;
    WnlOp L4, L6;
    std::string checksum;  // FNV-1a of the canonical fixture text

    // The built-in transcription (see fixtures/knv_fixtures.txt for notes).
    static Fixtures builtin();
    // Load G0..G3 and H0..H2 from a fixture file; H0inv, L4, L6 are derived.
    static Fixtures load_file(const std::string& path);

    // alpha*H0 + beta*H1 + gamma*H2 with symbolic pencil parameters.
    WnlOp pencil() const;
    std::vector<RingElem> symmetries() const { return {G0, G1, G2, G3}; }

    // Substitute parameter values (e.g. specializing P) everywhere.
    Fixtures specialized(const std::map<VarId, Coeff>& assignment) const;
};

// Canonical fixture-file body: G0..G3 and H0..H2, one definition per line,
// in the cli expression grammar. The checksum is taken over this text, so
// semantically equal fixture files agree on it.
std::string fixture_text(const Fixtures& f);

// --- identity residuals -----------------------------------------------------

// X_F(L) - [D_F, L]; zero iff L is a recursion operator for u_t = F.
WnlOp recursion_residual(const WnlOp& l, const RingElem& f);

// X_E(L) - D_E L - L D_E^*; zero iff E preserves the Hamiltonian operator L.
WnlOp hamiltonian_residual(const WnlOp& l, const RingElem& e);

// A^*(X_E(B) + D_E^* B) - B^*(D_E A - X_E(A)); the localized form of the
// residual above for L = A B^{-1}.
LocalOp fraction_identity_residual(const LocalOp& a, const LocalOp& b, const RingElem& e);

// The bidifferential compatibility expression for L = A B^{-1}, with the two
// test flows instantiated as the auxiliary dependents w1 and w2. Zero
// certifies the universally quantified Hamiltonian property, not just
// instances.
RingElem bidifferential_residual(const LocalOp& a, const LocalOp& b);

// apply(L, G, constants): the next flow up the hierarchy. Propagates
// integration errors (with the failing tail index) unchanged.
RingElem next_symmetry(const WnlOp& l, const RingElem& g,
                       const std::vector<RingElem>& constants = {});

// Hamiltonian-density certificate: psi = H0inv(G) and its Helmholtz verdict.
struct HamiltonianRoot {
    RingElem psi;
    bool helmholtz;
};
HamiltonianRoot hamiltonian_root(const LocalOp& h0inv, const RingElem& g);

// --- check runner ------------------------------------------------------------

// check in {skew, commute, recursion, hamiltonian, fraction, bidifferential,
// densities, pencil, generate, fixtures, all}; throws DomainError on other
// names. Obstructions surface as verdict=error reports, never as passes.
std::vector<Report> run_check(const std::string& check, const Fixtures& fx, const RunMode& mode);

inline bool all_passed(const std::vector<Report>& rs) {
    for (const auto& r : rs)
        if (!r.passed()) return false;
    return true;
}

}  // namespace knv
