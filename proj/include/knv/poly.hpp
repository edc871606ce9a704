#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "knv/errors.hpp"
#include "knv/varid.hpp"

namespace knv {

using Coeff = mpq_class;

// Sparse exponent vector, entries sorted ascending by variable id, all
// exponents positive. Total degree is cached for the graded comparator.
struct Monomial {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    uint64_t deg = 0;

    bool empty() const { return e.empty(); }
    uint32_t exponent(VarId v) const;
    size_t hash() const;
    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

// Graded lexicographic comparison; returns -1, 0, +1.
int cmp_grlex(const Monomial& a, const Monomial& b);

Monomial mon_mul(const Monomial& a, const Monomial& b);
Monomial mon_gcd(const Monomial& a, const Monomial& b);
// Requires b | a.
Monomial mon_div(const Monomial& a, const Monomial& b);
bool mon_divides(const Monomial& b, const Monomial& a);

struct Term {
    Monomial mon;
    Coeff coeff;
};

// Sparse multivariate polynomial over Q, terms sorted descending grlex.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Coeff& c);
    static Poly variable(VarId v, uint32_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.empty()); }
    // Requires is_constant().
    Coeff constant_value() const;
    bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }
    // Single term (monomial times coefficient)?
    bool is_term() const { return terms_.size() == 1; }

    size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    uint64_t total_degree() const { return terms_.empty() ? 0 : terms_[0].mon.deg; }
    uint32_t degree_in(VarId v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly& o) const;

    Poly scaled(const Coeff& c) const;
    Poly term_multiplied(const Term& t) const;

    // Formal partial derivative with respect to a single variable.
    Poly derivative(VarId v) const;

    std::set<VarId> vars() const;
    bool has_var(VarId v) const { return degree_in(v) > 0; }

    // Substitute rational values for a subset of variables.
    Poly substituted(const std::map<VarId, Coeff>& assignment) const;

    // Full evaluation; throws DomainError if a variable is unassigned.
    Coeff evaluate(const std::map<VarId, Coeff>& assignment) const;

    // Evaluation in Z/p, p = 2^61 - 1; assignment indexed by raw var id.
    uint64_t evaluate_mod(const std::map<uint32_t, uint64_t>& assignment) const;

    // Construction escape hatch: takes unsorted/unnormalized terms.
    static Poly from_terms(std::vector<Term> terms);

  private:
    std::vector<Term> terms_;
};

inline Poly operator*(const Poly& a, const Coeff& c) { return a.scaled(c); }

// Exact multivariate division; throws DomainError if b does not divide a.
Poly divexact(const Poly& a, const Poly& b);

// Exact division that reports failure instead of throwing.
std::optional<Poly> try_divexact(const Poly& a, const Poly& b);

// GCD, returned integer-primitive with positive leading coefficient.
// poly_gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Gcd of a whole family: the common polynomial content of u.
Poly poly_content(const std::vector<Poly>& u);

namespace modp {
inline constexpr uint64_t kPrime = (uint64_t(1) << 61) - 1;
uint64_t mul(uint64_t a, uint64_t b);
uint64_t add(uint64_t a, uint64_t b);
uint64_t sub(uint64_t a, uint64_t b);
uint64_t pow(uint64_t a, uint64_t e);
uint64_t inv(uint64_t a);
uint64_t coeff_mod(const Coeff& c);
}  // namespace modp

namespace kernels {

// Serial reference product; the parallel kernel must match it exactly.
Poly mul_serial(const Poly& a, const Poly& b);
// OpenMP product kernel.
Poly mul_parallel(const Poly& a, const Poly& b);

void set_parallel_enabled(bool on);
bool parallel_enabled();

// Evaluate p at many points in Z/p; points[i] assigns raw var ids.
std::vector<uint64_t> eval_batch_serial(const Poly& p,
                                        const std::vector<std::map<uint32_t, uint64_t>>& points);
std::vector<uint64_t> eval_batch_parallel(const Poly& p,
                                          const std::vector<std::map<uint32_t, uint64_t>>& points);

}  // namespace kernels

}  // namespace knv
