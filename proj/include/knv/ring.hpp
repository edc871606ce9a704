#pragma once

#include <map>
#include <optional>
#include <random>

#include "knv/poly.hpp"

namespace knv {

// Element of the differential rational-function ring
// K = Q(p0..p4, alpha, beta, gamma)(u, u1, ...; w1_0, ...; w2_0, ...).
// Canonical form: reduced fraction, denominator grlex-monic.
class RingElem {
  public:
    RingElem() : den_(Coeff(1)) {}
    RingElem(const Coeff& c) : num_(c), den_(Coeff(1)) {}
    RingElem(long n) : num_(Coeff(n)), den_(Coeff(1)) {}
    explicit RingElem(Poly num) : num_(std::move(num)), den_(Coeff(1)) {}
    RingElem(Poly num, Poly den);

    static RingElem var(VarId v) { return RingElem(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Constant over the base field Q(parameters)?
    bool is_parameter_only() const;

    RingElem operator-() const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    RingElem& operator/=(const RingElem& o);
    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    friend RingElem operator/(const RingElem& a, const RingElem& b);
    bool operator==(const RingElem& o) const { return num_ == o.num_ && den_ == o.den_; }

    RingElem inverse() const;
    RingElem pow(long e) const;

    std::set<VarId> vars() const;

    // Substitute rational values for a subset of variables; throws
    // EvaluationError if the denominator vanishes under the substitution.
    RingElem substituted(const std::map<VarId, Coeff>& assignment) const;

  private:
    Poly num_, den_;
    void normalize_inplace();
};

// normalize is the identity on RingElem values (construction canonicalizes);
// exposed for fraction inputs.
inline RingElem normalize(Poly num, Poly den) { return RingElem(std::move(num), std::move(den)); }

// k-fold total derivative: d(u_n) = u_{n+1}, d(w^i_n) = w^i_{n+1}, d(param) = 0.
RingElem total_derivative(const RingElem& e, unsigned k = 1);
Poly total_derivative_poly(const Poly& p);

RingElem partial_derivative(const RingElem& e, VarId v);

// Largest n with d e / d u_n != 0; nullopt for parameter-only elements.
// Throws DomainError if auxiliary dependents are present.
std::optional<int> diff_order(const RingElem& e);

// Exact evaluation over Q; throws EvaluationError on vanishing denominator.
Coeff evaluate(const RingElem& e, const std::map<VarId, Coeff>& assignment);

enum class ZeroMode { exact, probabilistic };

bool is_zero(const RingElem& e);  // exact
// Schwartz-Zippel zero test over Z/(2^61-1): false is definitive; true has
// failure probability <= deg/p per trial. Retries denominator-vanishing
// points up to a budget, then throws EvaluationError.
bool is_zero_probabilistic(const RingElem& e, int trials, std::mt19937_64& rng);

// A sum of products, evaluated lazily mod p: probabilistic zero tests on
// large combinations without expanding the product polynomials.
struct ProductSum {
    std::vector<std::pair<RingElem, RingElem>> terms;
    void add(RingElem a, RingElem b) { terms.emplace_back(std::move(a), std::move(b)); }
    RingElem expand() const;
    std::set<VarId> vars() const;
};
bool is_zero_probabilistic(const ProductSum& s, int trials, std::mt19937_64& rng);

// The distinguished polynomial P = p4 u^4 + ... + p0 and its u-derivatives.
struct PolyP {
    static RingElem P();
    static RingElem Pu();
    static RingElem Puu();
    static RingElem Puuu();
    static RingElem Puuuu();
    // d^k P / du^k, k <= 5 (the fifth derivative is zero)
    static RingElem deriv(unsigned k);
};

}  // namespace knv
