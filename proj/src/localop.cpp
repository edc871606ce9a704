#include "knv/localop.hpp"

#include <random>

namespace knv {

Coeff binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Coeff(b);
}

LocalOp LocalOp::monomial(RingElem c, unsigned k) {
    LocalOp r;
    if (c.is_zero()) return r;
    r.c_.resize(k + 1);
    r.c_[k] = std::move(c);
    return r;
}

const RingElem& LocalOp::coeff(unsigned k) const {
    static const RingElem zero;
    return k < c_.size() ? c_[k] : zero;
}

void LocalOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LocalOp LocalOp::operator-() const {
    LocalOp r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LocalOp& LocalOp::operator+=(const LocalOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

LocalOp& LocalOp::operator-=(const LocalOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

LocalOp operator+(const LocalOp& a, const LocalOp& b) {
    LocalOp r = a;
    r += b;
    return r;
}

LocalOp operator-(const LocalOp& a, const LocalOp& b) {
    LocalOp r = a;
    r -= b;
    return r;
}

LocalOp LocalOp::scaled(const RingElem& c) const {
    if (c.is_zero()) return LocalOp();
    LocalOp r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

RingElem LocalOp::apply(const RingElem& f) const {
    RingElem acc;
    RingElem fk = f;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k > 0) fk = total_derivative(fk);
        if (!c_[k].is_zero()) acc += c_[k] * fk;
    }
    return acc;
}

LocalOp LocalOp::from_coeffs(std::vector<RingElem> coeffs) {
    LocalOp r;
    r.c_ = std::move(coeffs);
    r.trim();
    return r;
}

LocalOp compose(const LocalOp& a, const LocalOp& b) {
    if (a.is_zero() || b.is_zero()) return LocalOp();
    std::vector<RingElem> out(size_t(a.order() + b.order()) + 1);
    // derivatives of b's coefficients up to order(a)
    std::vector<std::vector<RingElem>> db(b.coeffs().size());
    for (size_t j = 0; j < db.size(); ++j) {
        db[j].push_back(b.coeff(j));
        for (int s = 1; s <= a.order(); ++s) db[j].push_back(total_derivative(db[j][s - 1]));
    }
    for (int i = 0; i <= a.order(); ++i) {
        const RingElem& ai = a.coeff(i);
        if (ai.is_zero()) continue;
        for (int j = 0; j <= b.order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            for (int s = 0; s <= i; ++s)
                out[i + j - s] += ai * db[j][s] * RingElem(Coeff(binomial(i, s)));
        }
    }
    return LocalOp::from_coeffs(std::move(out));
}

LocalOp adjoint(const LocalOp& a) {
    if (a.is_zero()) return LocalOp();
    std::vector<RingElem> out(size_t(a.order()) + 1);
    for (int i = 0; i <= a.order(); ++i) {
        const RingElem& ai = a.coeff(i);
        if (ai.is_zero()) continue;
        RingElem dk = ai;
        for (int s = 0; s <= i; ++s) {
            if (s > 0) dk = total_derivative(dk);
            RingElem c = dk * RingElem(Coeff(binomial(i, s)));
            if (i % 2) c = -c;
            out[i - s] += c;
        }
    }
    return LocalOp::from_coeffs(std::move(out));
}

std::pair<LocalOp, LocalOp> right_divide(const LocalOp& a, const LocalOp& b) {
    if (b.is_zero()) throw DomainError("right_divide: division by the zero operator");
    LocalOp q, r = a;
    while (!r.is_zero() && r.order() >= b.order()) {
        LocalOp t = LocalOp::monomial(r.leading() / b.leading(), unsigned(r.order() - b.order()));
        q += t;
        LocalOp next = r - compose(t, b);
        // leading term cancels by construction
        if (next.order() >= r.order()) throw Error("right_divide: no progress");
        r = std::move(next);
    }
    return {std::move(q), std::move(r)};
}

namespace {

// Left-multiplying an operator by a nonzero function preserves its right
// divisors, so the Euclidean chain may rescale freely. Clearing denominators
// and stripping the common coefficient content keeps the intermediate
// remainders from blowing up on large operators.
LocalOp primitive_scaled(const LocalOp& a) {
    if (a.is_zero()) return a;
    Poly l(Coeff(1));
    for (int k = 0; k <= a.order(); ++k) {
        const Poly& d = a.coeff(unsigned(k)).den();
        if (!d.is_one()) l = divexact(l * d, poly_gcd(l, d));
    }
    std::vector<RingElem> cs(size_t(a.order()) + 1);
    std::vector<Poly> nums;
    RingElem le(l);
    for (int k = 0; k <= a.order(); ++k) {
        cs[size_t(k)] = a.coeff(unsigned(k)) * le;
        if (!cs[size_t(k)].is_zero()) nums.push_back(cs[size_t(k)].num());
    }
    Poly c = poly_content(nums);
    if (!c.is_one() && !c.is_zero())
        for (auto& e : cs)
            if (!e.is_zero()) e = RingElem(divexact(e.num(), c));
    return LocalOp::from_coeffs(std::move(cs));
}

// Right pseudo-remainder: eliminate with cross-multiplied leading
// coefficients so everything stays polynomial. Both operands must have
// polynomial (denominator-free) coefficients.
LocalOp right_prem(LocalOp x, const LocalOp& y) {
    const RingElem& ly = y.leading();
    while (!x.is_zero() && x.order() >= y.order()) {
        RingElem lx = x.leading();
        LocalOp shift =
            compose(LocalOp::monomial(RingElem(Coeff(1)), unsigned(x.order() - y.order())), y);
        x = x.scaled(ly) - shift.scaled(lx);
    }
    return x;
}

// Peel the leading-coefficient powers that pseudo-division smuggles in,
// then strip whatever common content remains.
LocalOp strip_common(LocalOp r, const Poly& ly) {
    if (r.is_zero()) return r;
    if (!ly.is_constant()) {
        bool again = true;
        while (again) {
            std::vector<RingElem> qs(size_t(r.order()) + 1);
            for (int k = 0; k <= r.order() && again; ++k) {
                const RingElem& c = r.coeff(unsigned(k));
                if (c.is_zero()) continue;
                auto q = try_divexact(c.num(), ly);
                if (!q)
                    again = false;
                else
                    qs[size_t(k)] = RingElem(std::move(*q));
            }
            if (again) r = LocalOp::from_coeffs(std::move(qs));
        }
    }
    std::vector<Poly> nums;
    for (int k = 0; k <= r.order(); ++k)
        if (!r.coeff(unsigned(k)).is_zero()) nums.push_back(r.coeff(unsigned(k)).num());
    Poly c = poly_content(nums);
    if (!c.is_zero() && !c.is_one()) {
        std::vector<RingElem> qs(size_t(r.order()) + 1);
        for (int k = 0; k <= r.order(); ++k)
            if (!r.coeff(unsigned(k)).is_zero())
                qs[size_t(k)] = RingElem(divexact(r.coeff(unsigned(k)).num(), c));
        r = LocalOp::from_coeffs(std::move(qs));
    }
    return r;
}

}  // namespace

bool right_coprime_certificate(const LocalOp& a, const LocalOp& b, uint64_t seed) {
    // Differential-resultant test: stack the rows D^i∘a (i < ord b) and
    // D^j∘b (j < ord a) as coefficient vectors in D^0..D^{ord a + ord b - 1}.
    // A common right factor of positive order makes every row a left
    // multiple of it, forcing the square matrix singular identically; so a
    // NONZERO determinant at a single evaluation point is an exact proof of
    // right-coprimality. A zero determinant is merely inconclusive.
    if (a.is_zero() || b.is_zero()) return false;
    int m = a.order(), n = b.order();
    if (m == 0 || n == 0) return true;
    std::vector<LocalOp> rows;
    LocalOp da = a;
    for (int i = 0; i < n; ++i) {
        if (i) da = compose(LocalOp::d(), da);
        rows.push_back(da);
    }
    LocalOp db = b;
    for (int j = 0; j < m; ++j) {
        if (j) db = compose(LocalOp::d(), db);
        rows.push_back(db);
    }
    size_t dim = size_t(m + n);
    std::set<VarId> vars;
    for (const auto& r : rows)
        for (int k = 0; k <= r.order(); ++k)
            for (VarId v : r.coeff(unsigned(k)).vars()) vars.insert(v);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(1, modp::kPrime - 1);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::map<uint32_t, uint64_t> pt;
        for (VarId v : vars) pt[v.raw] = dist(rng);
        std::vector<std::vector<uint64_t>> mat(dim, std::vector<uint64_t>(dim, 0));
        bool bad = false;
        for (size_t i = 0; i < dim && !bad; ++i)
            for (int k = 0; k <= rows[i].order() && !bad; ++k) {
                const RingElem& c = rows[i].coeff(unsigned(k));
                if (c.is_zero()) continue;
                uint64_t den = c.den().evaluate_mod(pt);
                if (den == 0) {
                    bad = true;
                    break;
                }
                mat[i][size_t(k)] = modp::mul(c.num().evaluate_mod(pt), modp::inv(den));
            }
        if (bad) continue;
        // Gaussian elimination mod p
        bool singular = false;
        for (size_t col = 0; col < dim && !singular; ++col) {
            size_t piv = col;
            while (piv < dim && mat[piv][col] == 0) ++piv;
            if (piv == dim) {
                singular = true;
                break;
            }
            std::swap(mat[piv], mat[col]);
            uint64_t ipv = modp::inv(mat[col][col]);
            for (size_t i = col + 1; i < dim; ++i) {
                if (mat[i][col] == 0) continue;
                uint64_t f = modp::mul(mat[i][col], ipv);
                for (size_t j = col; j < dim; ++j)
                    mat[i][j] = modp::sub(mat[i][j], modp::mul(f, mat[col][j]));
            }
        }
        if (!singular) return true;
    }
    return false;
}

LocalOp right_gcd(const LocalOp& a, const LocalOp& b) {
    LocalOp x = primitive_scaled(a), y = primitive_scaled(b);
    if (x.is_zero() && y.is_zero()) throw DomainError("right_gcd of two zero operators");
    if (x.is_zero()) std::swap(x, y);
    while (!y.is_zero()) {
        LocalOp r = right_prem(x, y);
        Poly ly = y.leading().num();
        x = std::move(y);
        y = strip_common(std::move(r), ly);
    }
    return x.scaled(x.leading().inverse());  // monic
}

}  // namespace knv
