#pragma once

#include <utility>
#include <vector>

#include "knv/ring.hpp"

namespace knv {

// Local differential operator: sum of c_k D^k with k >= 0, c_k in the ring.
// Stored dense by power with a nonzero top coefficient; order() of the zero
// operator is -1.
class LocalOp {
  public:
    LocalOp() = default;

    static LocalOp identity() { return monomial(RingElem(1), 0); }
    static LocalOp d(unsigned k = 1) { return monomial(RingElem(1), k); }
    static LocalOp mul(RingElem c) { return monomial(std::move(c), 0); }
    static LocalOp monomial(RingElem c, unsigned k);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const RingElem& coeff(unsigned k) const;
    const RingElem& leading() const { return c_.back(); }
    const std::vector<RingElem>& coeffs() const { return c_; }

    LocalOp operator-() const;
    LocalOp& operator+=(const LocalOp& o);
    LocalOp& operator-=(const LocalOp& o);
    friend LocalOp operator+(const LocalOp& a, const LocalOp& b);
    friend LocalOp operator-(const LocalOp& a, const LocalOp& b);
    bool operator==(const LocalOp& o) const { return c_ == o.c_; }

    LocalOp scaled(const RingElem& c) const;

    RingElem apply(const RingElem& f) const;

    static LocalOp from_coeffs(std::vector<RingElem> coeffs);

  private:
    std::vector<RingElem> c_;
    void trim();
};

// Operator composition a . b.
LocalOp compose(const LocalOp& a, const LocalOp& b);

// (sum c_k D^k)* = sum (-D)^k . c_k
LocalOp adjoint(const LocalOp& a);

// a = q . b + r with order(r) < order(b); throws DomainError if b = 0.
std::pair<LocalOp, LocalOp> right_divide(const LocalOp& a, const LocalOp& b);

// Monic generator of the right-divisor lattice (Euclidean algorithm).
LocalOp right_gcd(const LocalOp& a, const LocalOp& b);

// One-sided coprimality proof: true means right_gcd(a, b) is certainly
// trivial (a nonzero specialization of the differential resultant); false
// means the test was inconclusive and an exact right_gcd is needed.
bool right_coprime_certificate(const LocalOp& a, const LocalOp& b, uint64_t seed = 0x6b6e7631);

Coeff binomial(unsigned n, unsigned k);

}  // namespace knv
