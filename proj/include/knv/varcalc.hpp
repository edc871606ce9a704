#pragma once

#include "knv/localop.hpp"

namespace knv {

// Evolutionary derivation X_F induced by u_t = F; commutes with the total
// derivative. Auxiliary dependents w^i are X-constants.
struct EvolGen {
    RingElem gen;
    unsigned dep = 0;
};

// Fréchet derivative D_f = sum_n (df/du_n) D^n. f must involve only u-jets
// and parameters.
LocalOp frechet(const RingElem& f);

// delta f / delta u = D_f^*(1) = sum_n (-D)^n (df/du_n).
RingElem variational_derivative(const RingElem& f);

// X_F(e) = sum_n d^n(F) de/du_n.
RingElem evol_apply(const EvolGen& x, const RingElem& e);

// {f, g} = X_f(g) - X_g(f); zero iff f and g are symmetries of one another.
RingElem lie_bracket(const RingElem& f, const RingElem& g);

// The bracket as an unexpanded sum of products, for lazy probabilistic
// zero-testing of heavy pairs.
ProductSum lie_bracket_terms(const RingElem& f, const RingElem& g);

// (D_Pop)_f: the operator g -> X_g(Pop)(f); coefficient of D^n is
// sum_k (dc_k/du_n) d^k(f).
LocalOp op_frechet(const LocalOp& pop, const RingElem& f);

// Helmholtz criterion: is frechet(psi) self-adjoint?
bool is_variational(const RingElem& psi);

struct Integration {
    enum class Status {
        ok,
        not_total_derivative,  // Euler test failed
        logarithmic,           // antiderivative exists only outside the ring
        residual               // nonzero constant (or u-only) residual
    };
    Status status = Status::ok;
    RingElem value;     // g with d(g) = f - residual, as far as integration got
    RingElem residual;  // for status residual
    bool ok() const { return status == Status::ok; }
    const char* status_name() const;
};

// Inverse total derivative in the ring, zero additive constant. f must
// involve only u-jets and parameters.
Integration integrate_total_derivative(const RingElem& f);

// Integration in a single jet variable, other variables constant: value with
// d value / d x integrating f, plus a flag when a logarithmic part remains.
struct UnivIntegration {
    RingElem value;
    bool logarithmic = false;
};
UnivIntegration integrate_univariate(const RingElem& f, VarId x);

}  // namespace knv
