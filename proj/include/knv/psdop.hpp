#pragma once

#include "knv/varcalc.hpp"

namespace knv {

// One non-local tail p . Dinv . q.
struct Tail {
    RingElem p, q;
};

// Raised when a tail of apply() hits a non-integrable density.
struct TailIntegrationError : Error {
    int tail_index;
    Integration::Status status;
    TailIntegrationError(int idx, Integration::Status st, const std::string& what_)
        : Error(what_), tail_index(idx), status(st) {}
};

// Weakly non-local operator: local part plus finitely many tails. Tails are
// never nested; compositions reduce to this normal form or fail loudly.
class WnlOp {
  public:
    LocalOp local;
    std::vector<Tail> tails;

    WnlOp() = default;
    WnlOp(LocalOp l) : local(std::move(l)) {}
    static WnlOp tail(RingElem p, RingElem q);

    int local_order() const { return local.order(); }

    WnlOp operator-() const;
    WnlOp& operator+=(const WnlOp& o);
    WnlOp& operator-=(const WnlOp& o);
    friend WnlOp operator+(const WnlOp& a, const WnlOp& b);
    friend WnlOp operator-(const WnlOp& a, const WnlOp& b);

    WnlOp scaled(const RingElem& c) const;

    // Zero after canonicalization?
    bool is_zero() const;
};

// Product L . M in canonical form. Tail-times-tail products integrate their
// density; a non-integrable density throws NonIntegrableTailProduct.
WnlOp compose(const WnlOp& l, const WnlOp& m);

WnlOp adjoint(const WnlOp& l);

// Merge tails by Gaussian reduction over the constants field until both the
// p-set and the q-set are linearly independent; idempotent.
WnlOp canonicalize(const WnlOp& l);

// L(f): local(f) + sum_i p_i (Dinv(q_i f) + c_i). constants supplies one
// integration constant per tail (missing entries are zero).
RingElem apply(const WnlOp& l, const RingElem& f, const std::vector<RingElem>& constants = {});

// Coefficient-wise evolutionary derivation X(L).
WnlOp derive_op(const EvolGen& x, const WnlOp& l);

// The order-|qs| operator B with adjoint(B)(q_i) = 0 for all i; composing a
// weakly non-local operator with these tail densities by B on the right kills
// the tails. adjoint(B) is normalized with the Wronskian of the qs as leading
// coefficient (the monic choice times a right unit): its coefficients are
// then the Wronskian minors, which keeps downstream compositions polynomial-
// sized. Throws DegenerateInput on dependent qs.
LocalOp wronskian_denominator(const std::vector<RingElem>& qs);

struct FractionForm {
    LocalOp a;
    LocalOp b;
    LocalOp rgcd;
    bool coprime = true;
};

// L = A . B^{-1} with B the Wronskian denominator of the tails; reports
// right_gcd(A, B). Non-coprime pairs are returned with coprime = false.
FractionForm fraction_form(const WnlOp& l);

}  // namespace knv
