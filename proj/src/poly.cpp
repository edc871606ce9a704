#include "knv/poly.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knv {

uint32_t Monomial::exponent(VarId v) const {
    for (const auto& [var, exp] : e)
        if (var == v.raw) return exp;
    return 0;
}

size_t Monomial::hash() const {
    uint64_t h = 1469598103934665603ull;
    for (const auto& [var, exp] : e) {
        h ^= var;
        h *= 1099511628211ull;
        h ^= exp;
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

int cmp_grlex(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first != b.e[j].first)
            return a.e[i].first < b.e[j].first ? 1 : -1;
        if (a.e[i].second != b.e[j].second)
            return a.e[i].second > b.e[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < a.e.size()) return 1;
    if (j < b.e.size()) return -1;
    return 0;
}

Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e.reserve(a.e.size() + b.e.size());
    size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first == b.e[j].first) {
            r.e.emplace_back(a.e[i].first, a.e[i].second + b.e[j].second);
            ++i, ++j;
        } else if (a.e[i].first < b.e[j].first) {
            r.e.push_back(a.e[i++]);
        } else {
            r.e.push_back(b.e[j++]);
        }
    }
    for (; i < a.e.size(); ++i) r.e.push_back(a.e[i]);
    for (; j < b.e.size(); ++j) r.e.push_back(b.e[j]);
    r.deg = a.deg + b.deg;
    return r;
}

Monomial mon_gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first == b.e[j].first) {
            uint32_t exp = std::min(a.e[i].second, b.e[j].second);
            r.e.emplace_back(a.e[i].first, exp);
            r.deg += exp;
            ++i, ++j;
        } else if (a.e[i].first < b.e[j].first) {
            ++i;
        } else {
            ++j;
        }
    }
    return r;
}

bool mon_divides(const Monomial& b, const Monomial& a) {
    size_t i = 0;
    for (const auto& [var, exp] : b.e) {
        while (i < a.e.size() && a.e[i].first < var) ++i;
        if (i == a.e.size() || a.e[i].first != var || a.e[i].second < exp) return false;
    }
    return true;
}

Monomial mon_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t j = 0;
    for (const auto& [var, exp] : a.e) {
        uint32_t sub = 0;
        while (j < b.e.size() && b.e[j].first < var) ++j;
        if (j < b.e.size() && b.e[j].first == var) sub = b.e[j].second;
        if (sub > exp) throw DomainError("monomial division is not exact");
        if (exp > sub) {
            r.e.emplace_back(var, exp - sub);
            r.deg += exp - sub;
        }
    }
    return r;
}

Poly::Poly(const Coeff& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(VarId v, uint32_t exp) {
    Poly p;
    if (exp == 0) return Poly(Coeff(1));
    Monomial m;
    m.e.emplace_back(v.raw, exp);
    m.deg = exp;
    p.terms_.push_back({std::move(m), Coeff(1)});
    return p;
}

Coeff Poly::constant_value() const {
    if (terms_.empty()) return Coeff(0);
    return terms_[0].coeff;
}

uint32_t Poly::degree_in(VarId v) const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.exponent(v));
    return d;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                     bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = cmp_grlex(a[i].mon, b[j].mon);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j]);
            if (negate_b) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Coeff s = negate_b ? Coeff(a[i].coeff - b[j].coeff) : Coeff(a[i].coeff + b[j].coeff);
            if (s != 0) out.push_back({a[i].mon, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (negate_b) out.back().coeff = -out.back().coeff;
    }
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.terms_ = merge_terms(a.terms_, b.terms_, false);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.terms_ = merge_terms(a.terms_, b.terms_, true);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (kernels::parallel_enabled() && a.size() * b.size() > 65536)
        return kernels::mul_parallel(a, b);
    return kernels::mul_serial(a, b);
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mon == o.terms_[i].mon))
            return false;
    return true;
}

Poly Poly::scaled(const Coeff& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::term_multiplied(const Term& t) const {
    if (t.coeff == 0) return Poly();
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& s : terms_) r.terms_.push_back({mon_mul(s.mon, t.mon), s.coeff * t.coeff});
    return r;
}

Poly Poly::derivative(VarId v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        uint32_t exp = t.mon.exponent(v);
        if (exp == 0) continue;
        Monomial m;
        m.deg = t.mon.deg - 1;
        for (const auto& [var, e] : t.mon.e) {
            if (var == v.raw) {
                if (e > 1) m.e.emplace_back(var, e - 1);
            } else {
                m.e.emplace_back(var, e);
            }
        }
        out.push_back({std::move(m), t.coeff * exp});
    }
    // derivative preserves grlex order within fixed v-exponent classes but not
    // globally; re-sort
    return from_terms(std::move(out));
}

std::set<VarId> Poly::vars() const {
    std::set<VarId> s;
    for (const auto& t : terms_)
        for (const auto& [var, exp] : t.mon.e) s.insert(VarId{var});
    return s;
}

Poly Poly::substituted(const std::map<VarId, Coeff>& assignment) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Coeff c = t.coeff;
        Monomial m;
        for (const auto& [var, exp] : t.mon.e) {
            auto it = assignment.find(VarId{var});
            if (it == assignment.end()) {
                m.e.emplace_back(var, exp);
                m.deg += exp;
            } else {
                Coeff pw = 1;
                Coeff base = it->second;
                for (uint32_t k = 0; k < exp; ++k) pw *= base;
                c *= pw;
            }
        }
        if (c != 0) out.push_back({std::move(m), std::move(c)});
    }
    return from_terms(std::move(out));
}

Coeff Poly::evaluate(const std::map<VarId, Coeff>& assignment) const {
    Coeff acc = 0;
    for (const auto& t : terms_) {
        Coeff c = t.coeff;
        for (const auto& [var, exp] : t.mon.e) {
            auto it = assignment.find(VarId{var});
            if (it == assignment.end())
                throw DomainError("evaluate: unassigned variable " + VarId{var}.name());
            for (uint32_t k = 0; k < exp; ++k) c *= it->second;
        }
        acc += c;
    }
    return acc;
}

namespace modp {

uint64_t mul(uint64_t a, uint64_t b) {
    __uint128_t t = static_cast<__uint128_t>(a) * b;
    uint64_t lo = static_cast<uint64_t>(t & kPrime);
    uint64_t hi = static_cast<uint64_t>(t >> 61);
    uint64_t r = lo + hi;
    if (r >= kPrime) r -= kPrime;
    return r;
}

uint64_t add(uint64_t a, uint64_t b) {
    uint64_t r = a + b;
    if (r >= kPrime) r -= kPrime;
    return r;
}

uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

uint64_t pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t inv(uint64_t a) {
    if (a == 0) throw EvaluationError("inverse of zero in prime field");
    return pow(a, kPrime - 2);
}

uint64_t coeff_mod(const Coeff& c) {
    uint64_t n = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
    uint64_t d = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
    return mul(n, inv(d));
}

}  // namespace modp

uint64_t Poly::evaluate_mod(const std::map<uint32_t, uint64_t>& assignment) const {
    uint64_t acc = 0;
    for (const auto& t : terms_) {
        uint64_t c = modp::coeff_mod(t.coeff);
        for (const auto& [var, exp] : t.mon.e) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw DomainError("evaluate_mod: unassigned variable " + VarId{var}.name());
            c = modp::mul(c, modp::pow(it->second, exp));
        }
        acc = modp::add(acc, c);
    }
    return acc;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return cmp_grlex(a.mon, b.mon) > 0; });
    Poly r;
    r.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!r.terms_.empty() && cmp_grlex(r.terms_.back().mon, t.mon) == 0) {
            r.terms_.back().coeff += t.coeff;
            if (r.terms_.back().coeff == 0) r.terms_.pop_back();
        } else {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

std::optional<Poly> try_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly();
    if (b.is_term()) {
        const Term& d = b.leading();
        std::vector<Term> out;
        out.reserve(a.size());
        for (const auto& t : a.terms()) {
            if (!mon_divides(d.mon, t.mon)) return std::nullopt;
            out.push_back({mon_div(t.mon, d.mon), t.coeff / d.coeff});
        }
        return Poly::from_terms(std::move(out));
    }
    Poly r = a;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        const Term& lb = b.leading();
        if (!mon_divides(lb.mon, lr.mon)) return std::nullopt;
        Term t{mon_div(lr.mon, lb.mon), lr.coeff / lb.coeff};
        r -= b.term_multiplied(t);
        q.push_back(std::move(t));
    }
    return Poly::from_terms(std::move(q));
}

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return Poly();
    if (b.is_term()) {
        const Term& d = b.leading();
        std::vector<Term> out;
        out.reserve(a.size());
        for (const auto& t : a.terms()) {
            if (!mon_divides(d.mon, t.mon)) throw DomainError("divexact: not divisible");
            out.push_back({mon_div(t.mon, d.mon), t.coeff / d.coeff});
        }
        return Poly::from_terms(std::move(out));
    }
    Poly r = a;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        const Term& lb = b.leading();
        if (!mon_divides(lb.mon, lr.mon)) throw DomainError("divexact: not divisible");
        Term t{mon_div(lr.mon, lb.mon), lr.coeff / lb.coeff};
        r -= b.term_multiplied(t);
        q.push_back(std::move(t));
    }
    return Poly::from_terms(std::move(q));
}

// ---------------------------------------------------------------------------
// Multiplication kernels

namespace kernels {

namespace {
struct MonHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};
using AccMap = std::unordered_map<Monomial, Coeff, MonHash>;

bool g_parallel = true;

Poly collect(AccMap& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [mon, c] : acc) {
        if (c != 0) out.push_back({mon, std::move(c)});
    }
    return Poly::from_terms(std::move(out));
}
}  // namespace

void set_parallel_enabled(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

Poly mul_serial(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.is_term()) return b.term_multiplied(a.leading());
    if (b.is_term()) return a.term_multiplied(b.leading());
    AccMap acc;
    acc.reserve(a.size() + b.size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) acc[mon_mul(ta.mon, tb.mon)] += ta.coeff * tb.coeff;
    return collect(acc);
}

Poly mul_parallel(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.is_term()) return b.term_multiplied(a.leading());
    if (b.is_term()) return a.term_multiplied(b.leading());
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    int nthreads = omp_get_max_threads();
    std::vector<AccMap> local(nthreads);
    const auto& at = a.terms();
#pragma omp parallel num_threads(nthreads)
    {
        AccMap& acc = local[omp_get_thread_num()];
        acc.reserve(b.size());
#pragma omp for schedule(dynamic, 8)
        for (size_t i = 0; i < at.size(); ++i)
            for (const auto& tb : b.terms()) acc[mon_mul(at[i].mon, tb.mon)] += at[i].coeff * tb.coeff;
    }
    AccMap& acc = local[0];
    for (int t = 1; t < nthreads; ++t) {
        for (auto& [mon, c] : local[t]) acc[mon] += c;
        local[t].clear();
    }
    return collect(acc);
#endif
}

std::vector<uint64_t> eval_batch_serial(const Poly& p,
                                        const std::vector<std::map<uint32_t, uint64_t>>& points) {
    std::vector<uint64_t> out(points.size());
    for (size_t i = 0; i < points.size(); ++i) out[i] = p.evaluate_mod(points[i]);
    return out;
}

std::vector<uint64_t> eval_batch_parallel(const Poly& p,
                                          const std::vector<std::map<uint32_t, uint64_t>>& points) {
    std::vector<uint64_t> out(points.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < points.size(); ++i) out[i] = p.evaluate_mod(points[i]);
    return out;
}

}  // namespace kernels

// ---------------------------------------------------------------------------
// GCD

namespace {

// Scale to integer coefficients with content 1 and positive leading coeff.
Poly int_primitive(const Poly& a) {
    if (a.is_zero()) return a;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : a.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    Coeff scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (a.leading().coeff < 0) scale = -scale;
    return a.scaled(scale);
}

Monomial monomial_content(const Poly& a) {
    Monomial m = a.terms()[0].mon;
    for (size_t i = 1; i < a.size() && !m.empty(); ++i) m = mon_gcd(m, a.terms()[i].mon);
    return m;
}

Poly strip_monomial(const Poly& a, const Monomial& m) {
    if (m.empty()) return a;
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) out.push_back({mon_div(t.mon, m), t.coeff});
    return Poly::from_terms(std::move(out));
}

Poly mono_poly(const Monomial& m) {
    Poly p(Coeff(1));
    if (m.empty()) return p;
    std::vector<Term> t{{m, Coeff(1)}};
    return Poly::from_terms(std::move(t));
}

uint64_t fnv_poly(const Poly& a, uint64_t h) {
    for (const auto& t : a.terms()) {
        h ^= t.mon.hash();
        h *= 1099511628211ull;
        h ^= mpz_fdiv_ui(t.coeff.get_num_mpz_t(), modp::kPrime);
        h *= 1099511628211ull;
    }
    return h;
}

// xorshift for deterministic probe points
uint64_t next_rand(uint64_t& s) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
}

// Degree in x of gcd of the univariate images of a, b at a random point for
// the other variables. Returns an upper bound for deg_x(gcd(a, b)) with
// overwhelming probability; exactness of callers never depends on it being
// a lower bound (a smaller value only skips work that a verifying PRS run
// would have discarded anyway). Returns nullopt on an unlucky image.
std::optional<int> probe_gcd_degree(const Poly& a, const Poly& b, VarId x, uint64_t seed) {
    std::map<uint32_t, uint64_t> pt;
    auto fill = [&](const Poly& p) {
        for (VarId v : p.vars())
            if (v != x && !pt.count(v.raw)) pt[v.raw] = 1 + next_rand(seed) % (modp::kPrime - 1);
    };
    fill(a);
    fill(b);
    auto image = [&](const Poly& p) {
        std::vector<uint64_t> u(p.degree_in(x) + 1, 0);
        for (const auto& t : p.terms()) {
            uint64_t c = modp::coeff_mod(t.coeff);
            uint32_t dx = 0;
            for (const auto& [var, exp] : t.mon.e) {
                if (var == x.raw) {
                    dx = exp;
                } else {
                    c = modp::mul(c, modp::pow(pt[var], exp));
                }
            }
            u[dx] = modp::add(u[dx], c);
        }
        while (!u.empty() && u.back() == 0) u.pop_back();
        return u;
    };
    std::vector<uint64_t> ua = image(a), ub = image(b);
    // degree collapse at the point: inconclusive
    if (ua.size() != size_t(a.degree_in(x)) + 1 || ub.size() != size_t(b.degree_in(x)) + 1)
        return std::nullopt;
    while (!ub.empty()) {
        // ua mod ub
        uint64_t lb = modp::inv(ub.back());
        while (ua.size() >= ub.size()) {
            uint64_t q = modp::mul(ua.back(), lb);
            size_t off = ua.size() - ub.size();
            for (size_t i = 0; i < ub.size(); ++i)
                ua[off + i] = modp::sub(ua[off + i], modp::mul(q, ub[i]));
            while (!ua.empty() && ua.back() == 0) ua.pop_back();
            if (ua.size() < ub.size()) break;
        }
        std::swap(ua, ub);
    }
    return static_cast<int>(ua.size()) - 1;
}

// Coefficients of a viewed as univariate in x; index = degree.
std::vector<Poly> univ_coeffs(const Poly& a, VarId x) {
    std::vector<std::vector<Term>> buckets(a.degree_in(x) + 1);
    for (const auto& t : a.terms()) {
        uint32_t dx = 0;
        Monomial m;
        for (const auto& [var, exp] : t.mon.e) {
            if (var == x.raw) {
                dx = exp;
            } else {
                m.e.emplace_back(var, exp);
                m.deg += exp;
            }
        }
        buckets[dx].push_back({std::move(m), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& bk : buckets) out.push_back(Poly::from_terms(std::move(bk)));
    return out;
}

Poly from_univ(const std::vector<Poly>& coeffs, VarId x) {
    Poly r;
    for (size_t i = 0; i < coeffs.size(); ++i) r += coeffs[i] * Poly::variable(x, uint32_t(i));
    return r;
}

int univ_deg(const std::vector<Poly>& u) {
    int d = int(u.size()) - 1;
    while (d >= 0 && u[d].is_zero()) --d;
    return d;
}

// Pseudo-remainder of a by b in x, both as coefficient vectors.
std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b) {
    int da = univ_deg(a), db = univ_deg(b);
    const Poly& lb = b[db];
    while (da >= db) {
        Poly la = a[da];
        for (int i = 0; i <= da; ++i) a[i] = a[i] * lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        a.resize(da);  // degree strictly drops
        da = univ_deg(a);
    }
    a.resize(da + 1);
    return a;
}

// Probabilistic check that the polys share no non-monomial factor: for every
// variable common to all of them, the gcd of their univariate images mod p at
// a random point must have degree zero twice in a row. Same reliance on probe
// triviality as the main-variable selection in poly_gcd.
bool probe_coprime(const std::vector<const Poly*>& u, uint64_t seed) {
    if (u.size() < 2) return false;
    std::set<VarId> common = u[0]->vars();
    for (size_t i = 1; i < u.size() && !common.empty(); ++i) {
        std::set<VarId> next;
        for (VarId v : u[i]->vars())
            if (common.count(v)) next.insert(v);
        common = std::move(next);
    }
    for (VarId x : common) {
        int confirmations = 0;
        for (int attempt = 0; attempt < 6 && confirmations < 2; ++attempt) {
            uint64_t s = seed + 7919 * uint64_t(attempt + 1) + x.raw;
            std::map<uint32_t, uint64_t> pt;
            for (const Poly* p : u)
                for (VarId v : p->vars())
                    if (v != x && !pt.count(v.raw)) pt[v.raw] = 1 + next_rand(s) % (modp::kPrime - 1);
            auto image = [&](const Poly& p) {
                std::vector<uint64_t> img(p.degree_in(x) + 1, 0);
                for (const auto& t : p.terms()) {
                    uint64_t c = modp::coeff_mod(t.coeff);
                    uint32_t dx = 0;
                    for (const auto& [var, exp] : t.mon.e) {
                        if (var == x.raw) dx = exp;
                        else c = modp::mul(c, modp::pow(pt[var], exp));
                    }
                    img[dx] = modp::add(img[dx], c);
                }
                while (!img.empty() && img.back() == 0) img.pop_back();
                return img;
            };
            std::vector<uint64_t> g = image(*u[0]);
            bool degenerate = g.size() != size_t(u[0]->degree_in(x)) + 1;
            for (size_t i = 1; i < u.size() && !degenerate && g.size() > 1; ++i) {
                std::vector<uint64_t> b = image(*u[i]);
                if (b.size() != size_t(u[i]->degree_in(x)) + 1) {
                    degenerate = true;
                    break;
                }
                while (!b.empty()) {
                    uint64_t lb = modp::inv(b.back());
                    while (g.size() >= b.size()) {
                        uint64_t q = modp::mul(g.back(), lb);
                        size_t off = g.size() - b.size();
                        for (size_t k = 0; k < b.size(); ++k)
                            g[off + k] = modp::sub(g[off + k], modp::mul(q, b[k]));
                        while (!g.empty() && g.back() == 0) g.pop_back();
                        if (g.size() < b.size()) break;
                    }
                    std::swap(g, b);
                }
            }
            if (degenerate) continue;
            if (g.size() > 1) return false;  // genuine common factor in x
            ++confirmations;
        }
        if (confirmations < 2) return false;  // could not certify; play safe
    }
    return true;
}

Poly univ_content(const std::vector<Poly>& u) {
    std::vector<const Poly*> nz;
    for (const auto& p : u)
        if (!p.is_zero()) nz.push_back(&p);
    if (nz.empty()) return Poly();
    if (nz.size() == 1) return int_primitive(*nz[0]);
    Monomial mc = monomial_content(*nz[0]);
    for (size_t i = 1; i < nz.size() && !mc.empty(); ++i)
        mc = mon_gcd(mc, monomial_content(*nz[i]));
    uint64_t seed = 1469598103934665603ull;
    for (const Poly* p : nz) seed = fnv_poly(*p, seed);
    if (probe_coprime(nz, seed | 1)) return mono_poly(mc);
    // genuine content: accumulate pairwise, smallest polys first
    std::sort(nz.begin(), nz.end(), [](const Poly* a, const Poly* b) { return a->size() < b->size(); });
    Poly c;
    for (const Poly* p : nz) {
        c = poly_gcd(c, *p);
        if (c.is_constant()) return mono_poly(mc);
    }
    return c;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return int_primitive(b);
    if (b.is_zero()) return int_primitive(a);
    Poly A = int_primitive(a), B = int_primitive(b);
    Monomial mA = monomial_content(A), mB = monomial_content(B);
    Monomial m = mon_gcd(mA, mB);
    A = strip_monomial(A, mA);
    B = strip_monomial(B, mB);
    if (A.is_constant() || B.is_constant()) return mono_poly(m);
    std::set<VarId> shared;
    {
        std::set<VarId> va = A.vars(), vb = B.vars();
        for (VarId v : va)
            if (vb.count(v)) shared.insert(v);
    }
    if (shared.empty()) return mono_poly(m);

    uint64_t seed = fnv_poly(A, fnv_poly(B, 1469598103934665603ull)) | 1;
    VarId main = *shared.begin();
    int best = -1;
    for (VarId x : shared) {
        int dx = std::min(A.degree_in(x), B.degree_in(x));
        for (int attempt = 0; attempt < 4; ++attempt) {
            auto d = probe_gcd_degree(A, B, x, seed + 7919 * attempt + x.raw);
            if (d) {
                dx = std::min(dx, *d);
                if (attempt >= 1) break;
            }
        }
        if (dx > 0 && (best < 0 || dx < best)) {
            best = dx;
            main = x;
        }
    }
    if (best < 0) return mono_poly(m);  // gcd is free of every shared variable

    std::vector<Poly> ua = univ_coeffs(A, main), ub = univ_coeffs(B, main);
    Poly contA = univ_content(ua), contB = univ_content(ub);
    Poly c = poly_gcd(contA, contB);
    for (auto& p : ua) p = divexact(p, contA);
    for (auto& p : ub) p = divexact(p, contB);
    if (univ_deg(ua) < univ_deg(ub)) std::swap(ua, ub);
    // Subresultant PRS on the primitive parts: remainders are divided by the
    // predicted subresultant factors (exact divisions only), so no recursive
    // multivariate content gcds are needed inside the loop. The coefficient
    // content is stripped once from the final candidate.
    Poly g(Coeff(1)), h(Coeff(1));
    while (true) {
        int delta = univ_deg(ua) - univ_deg(ub);
        std::vector<Poly> r = prem(ua, ub);
        if (univ_deg(r) < 0) break;
        if (univ_deg(r) == 0) return int_primitive(mono_poly(m) * c);
        Poly scale = g;
        for (int i = 0; i < delta; ++i) scale = scale * h;
        for (auto& p : r) p = divexact(p, scale);
        ua = std::move(ub);
        ub = std::move(r);
        g = ua[size_t(univ_deg(ua))];
        if (delta > 0) {
            Poly gp = g;
            for (int i = 1; i < delta; ++i) gp = gp * g;
            Poly hp(Coeff(1));
            for (int i = 1; i < delta; ++i) hp = hp * h;
            h = divexact(gp, hp);
        }
    }
    Poly cont = univ_content(ub);
    for (auto& p : ub) p = divexact(p, cont);
    Poly gg = from_univ(ub, main);
    return int_primitive(mono_poly(m) * c * gg);
}

Poly poly_content(const std::vector<Poly>& u) { return univ_content(u); }

}  // namespace knv
