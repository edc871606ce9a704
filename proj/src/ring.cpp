#include "knv/ring.hpp"

#include <algorithm>

namespace knv {

namespace {

Monomial num_monomial_content(const Poly& p) {
    Monomial m = p.terms()[0].mon;
    for (size_t i = 1; i < p.size() && !m.empty(); ++i) m = mon_gcd(m, p.terms()[i].mon);
    return m;
}

Poly div_by_monomial(const Poly& p, const Monomial& m) {
    if (m.empty()) return p;
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back({mon_div(t.mon, m), t.coeff});
    return Poly::from_terms(std::move(out));
}

// Remove the common polynomial factor of a and b (both nonzero).
void cross_cancel(Poly& a, Poly& b) {
    if (a.is_constant() || b.is_constant()) return;
    if (a.is_term() || b.is_term()) {
        Monomial g = mon_gcd(num_monomial_content(a), num_monomial_content(b));
        if (!g.empty()) {
            a = div_by_monomial(a, g);
            b = div_by_monomial(b, g);
        }
        return;
    }
    Poly g = poly_gcd(a, b);
    if (!g.is_one()) {
        a = divexact(a, g);
        b = divexact(b, g);
    }
}

// Scale an already-reduced fraction so the denominator is monic (or 1).
void monic_normalize(Poly& num, Poly& den) {
    if (den.is_constant()) {
        if (!den.is_one()) {
            num = num.scaled(1 / den.constant_value());
            den = Poly(Coeff(1));
        }
    } else if (den.leading().coeff != 1) {
        Coeff lc = den.leading().coeff;
        num = num.scaled(1 / lc);
        den = den.scaled(1 / lc);
    }
}

}  // namespace

RingElem::RingElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize_inplace();
}

void RingElem::normalize_inplace() {
    if (den_.is_zero()) throw DomainError("division by the zero polynomial");
    if (num_.is_zero()) {
        den_ = Poly(Coeff(1));
        return;
    }
    if (den_.is_constant()) {
        if (!den_.is_one()) {
            num_ = num_.scaled(1 / den_.constant_value());
            den_ = Poly(Coeff(1));
        }
        return;
    }
    if (den_.is_term()) {
        // denominator is a monomial: reduction is a monomial-content gcd
        Monomial g = mon_gcd(num_monomial_content(num_), den_.leading().mon);
        if (!g.empty()) {
            num_ = div_by_monomial(num_, g);
            den_ = div_by_monomial(den_, g);
        }
    } else {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    monic_normalize(num_, den_);
}

bool RingElem::is_parameter_only() const {
    for (VarId v : vars())
        if (v.is_jet()) return false;
    return true;
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    r.num_ = -r.num_;
    return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) {
        *this = o;
        return *this;
    }
    // With both fractions reduced, only the common denominator factor
    // g = gcd(den, o.den) can survive into the sum's denominator, so the
    // post-sum reduction is gcd(num, g) rather than a gcd of two products.
    Poly g = (den_.is_one() || o.den_.is_one()) ? Poly(Coeff(1)) : poly_gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        Poly d1r = divexact(den_, g), d2r = divexact(o.den_, g);
        num_ = num_ * d2r + o.num_ * d1r;
        den_ = den_ * d2r;
        if (num_.is_zero()) {
            den_ = Poly(Coeff(1));
            return *this;
        }
        Poly h = poly_gcd(num_, g);
        if (!h.is_one()) {
            num_ = divexact(num_, h);
            den_ = divexact(den_, h);
        }
    }
    monic_normalize(num_, den_);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ -= o.num_;
        return *this;
    }
    return *this += -o;
}

RingElem& RingElem::operator*=(const RingElem& o) {
    if (num_.is_zero() || o.num_.is_zero()) {
        num_ = Poly();
        den_ = Poly(Coeff(1));
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross-cancel each numerator against the opposite denominator; the
    // remaining products are then coprime, so no further gcd is needed.
    Poly n2 = o.num_, d2 = o.den_;
    cross_cancel(num_, d2);
    cross_cancel(n2, den_);
    num_ = num_ * n2;
    den_ = den_ * d2;
    monic_normalize(num_, den_);
    return *this;
}

RingElem& RingElem::operator/=(const RingElem& o) {
    *this *= o.inverse();
    return *this;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    RingElem r = a;
    r += b;
    return r;
}
RingElem operator-(const RingElem& a, const RingElem& b) {
    RingElem r = a;
    r -= b;
    return r;
}
RingElem operator*(const RingElem& a, const RingElem& b) {
    RingElem r = a;
    r *= b;
    return r;
}
RingElem operator/(const RingElem& a, const RingElem& b) {
    RingElem r = a;
    r /= b;
    return r;
}

RingElem RingElem::inverse() const {
    if (num_.is_zero()) throw DomainError("inverse of zero");
    return RingElem(den_, num_);
}

RingElem RingElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RingElem r(1);
    RingElem base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::set<VarId> RingElem::vars() const {
    std::set<VarId> s = num_.vars();
    for (VarId v : den_.vars()) s.insert(v);
    return s;
}

RingElem RingElem::substituted(const std::map<VarId, Coeff>& assignment) const {
    Poly d = den_.substituted(assignment);
    if (d.is_zero()) throw EvaluationError("denominator vanishes under substitution");
    return RingElem(num_.substituted(assignment), std::move(d));
}

Poly total_derivative_poly(const Poly& p) {
    Poly r;
    for (VarId v : p.vars()) {
        if (!v.is_jet()) continue;
        r += p.derivative(v) * Poly::variable(v.successor());
    }
    return r;
}

RingElem total_derivative(const RingElem& e, unsigned k) {
    RingElem r = e;
    for (unsigned i = 0; i < k; ++i) {
        if (r.den().is_one()) {
            r = RingElem(total_derivative_poly(r.num()));
        } else {
            Poly dn = total_derivative_poly(r.num());
            Poly dd = total_derivative_poly(r.den());
            r = RingElem(dn * r.den() - r.num() * dd, r.den() * r.den());
        }
    }
    return r;
}

RingElem partial_derivative(const RingElem& e, VarId v) {
    if (e.den().is_one()) return RingElem(e.num().derivative(v));
    return RingElem(e.num().derivative(v) * e.den() - e.num() * e.den().derivative(v),
                    e.den() * e.den());
}

std::optional<int> diff_order(const RingElem& e) {
    std::optional<int> n;
    for (VarId v : e.vars()) {
        if (!v.is_jet()) continue;
        if (v.dep() != 0)
            throw DomainError("diff_order: auxiliary dependent variable " + v.name() + " present");
        n = std::max(n.value_or(-1), int(v.order()));
    }
    return n;
}

Coeff evaluate(const RingElem& e, const std::map<VarId, Coeff>& assignment) {
    Coeff d = e.den().evaluate(assignment);
    if (d == 0) throw EvaluationError("denominator vanishes at the evaluation point");
    return e.num().evaluate(assignment) / d;
}

bool is_zero(const RingElem& e) { return e.num().is_zero(); }

namespace {

constexpr int kRetryBudget = 64;

std::map<uint32_t, uint64_t> random_point(const std::set<VarId>& vars, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(1, modp::kPrime - 1);
    std::map<uint32_t, uint64_t> pt;
    for (VarId v : vars) pt[v.raw] = dist(rng);
    return pt;
}

}  // namespace

bool is_zero_probabilistic(const RingElem& e, int trials, std::mt19937_64& rng) {
    if (e.num().is_zero()) return true;
    std::set<VarId> vs = e.vars();
    for (int t = 0; t < trials; ++t) {
        int retries = 0;
        while (true) {
            auto pt = random_point(vs, rng);
            if (e.den().evaluate_mod(pt) == 0) {
                if (++retries > kRetryBudget)
                    throw EvaluationError("denominator kept vanishing at random points");
                continue;
            }
            if (e.num().evaluate_mod(pt) != 0) return false;
            break;
        }
    }
    return true;
}

RingElem ProductSum::expand() const {
    RingElem acc;
    for (const auto& [a, b] : terms) acc += a * b;
    return acc;
}

std::set<VarId> ProductSum::vars() const {
    std::set<VarId> s;
    for (const auto& [a, b] : terms) {
        for (VarId v : a.vars()) s.insert(v);
        for (VarId v : b.vars()) s.insert(v);
    }
    return s;
}

bool is_zero_probabilistic(const ProductSum& s, int trials, std::mt19937_64& rng) {
    std::set<VarId> vs = s.vars();
    for (int t = 0; t < trials; ++t) {
        int retries = 0;
        while (true) {
            auto pt = random_point(vs, rng);
            bool bad = false;
            uint64_t acc = 0;
            for (const auto& [a, b] : s.terms) {
                uint64_t da = a.den().evaluate_mod(pt), db = b.den().evaluate_mod(pt);
                if (da == 0 || db == 0) {
                    bad = true;
                    break;
                }
                uint64_t va = modp::mul(a.num().evaluate_mod(pt), modp::inv(da));
                uint64_t vb = modp::mul(b.num().evaluate_mod(pt), modp::inv(db));
                acc = modp::add(acc, modp::mul(va, vb));
            }
            if (bad) {
                if (++retries > kRetryBudget)
                    throw EvaluationError("denominator kept vanishing at random points");
                continue;
            }
            if (acc != 0) return false;
            break;
        }
    }
    return true;
}

RingElem PolyP::P() {
    RingElem u = RingElem::var(VarId::jet(0, 0));
    RingElem acc;
    for (int i = 0; i <= 4; ++i) acc += RingElem::var(kParamP[i]) * u.pow(i);
    return acc;
}

RingElem PolyP::deriv(unsigned k) {
    if (k > 4) return RingElem(0);
    RingElem d = P();
    for (unsigned i = 0; i < k; ++i) d = partial_derivative(d, VarId::jet(0, 0));
    return d;
}

RingElem PolyP::Pu() { return deriv(1); }
RingElem PolyP::Puu() { return deriv(2); }
RingElem PolyP::Puuu() { return deriv(3); }
RingElem PolyP::Puuuu() { return deriv(4); }

}  // namespace knv
