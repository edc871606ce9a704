#include "knv/psdop.hpp"

#include "knv/linalg.hpp"

namespace knv {

WnlOp WnlOp::tail(RingElem p, RingElem q) {
    WnlOp r;
    if (!p.is_zero() && !q.is_zero()) r.tails.push_back({std::move(p), std::move(q)});
    return r;
}

WnlOp WnlOp::operator-() const {
    WnlOp r = *this;
    r.local = -r.local;
    for (auto& t : r.tails) t.p = -t.p;
    return r;
}

WnlOp& WnlOp::operator+=(const WnlOp& o) {
    local += o.local;
    tails.insert(tails.end(), o.tails.begin(), o.tails.end());
    return *this;
}

WnlOp& WnlOp::operator-=(const WnlOp& o) {
    *this += -o;
    return *this;
}

WnlOp operator+(const WnlOp& a, const WnlOp& b) {
    WnlOp r = a;
    r += b;
    return r;
}

WnlOp operator-(const WnlOp& a, const WnlOp& b) {
    WnlOp r = a;
    r -= b;
    return r;
}

WnlOp WnlOp::scaled(const RingElem& c) const {
    WnlOp r;
    r.local = local.scaled(c);
    if (!c.is_zero())
        for (const auto& t : tails) r.tails.push_back({t.p * c, t.q});
    return r;
}

bool WnlOp::is_zero() const {
    WnlOp c = canonicalize(*this);
    return c.local.is_zero() && c.tails.empty();
}

WnlOp canonicalize(const WnlOp& l) {
    WnlOp r = l;
    auto drop_trivial = [&] {
        std::vector<Tail> kept;
        for (auto& t : r.tails)
            if (!t.p.is_zero() && !t.q.is_zero()) kept.push_back(std::move(t));
        r.tails = std::move(kept);
    };
    drop_trivial();
    while (r.tails.size() > 1) {
        std::vector<RingElem> qs, ps;
        for (const auto& t : r.tails) {
            qs.push_back(t.q);
            ps.push_back(t.p);
        }
        auto qrels = constant_relations(qs);
        if (!qrels.empty()) {
            // q_j = -sum_{i != j} (c_i / c_j) q_i; fold the j-th tail into the rest
            const auto& c = qrels.front();
            size_t j = c.size();
            while (j-- > 0)
                if (!c[j].is_zero()) break;
            RingElem inv = c[j].inverse();
            for (size_t i = 0; i < r.tails.size(); ++i) {
                if (i == j || c[i].is_zero()) continue;
                r.tails[i].p -= c[i] * inv * r.tails[j].p;
            }
            r.tails.erase(r.tails.begin() + long(j));
            drop_trivial();
            continue;
        }
        auto prels = constant_relations(ps);
        if (!prels.empty()) {
            const auto& c = prels.front();
            size_t j = c.size();
            while (j-- > 0)
                if (!c[j].is_zero()) break;
            RingElem inv = c[j].inverse();
            for (size_t i = 0; i < r.tails.size(); ++i) {
                if (i == j || c[i].is_zero()) continue;
                r.tails[i].q -= c[i] * inv * r.tails[j].q;
            }
            r.tails.erase(r.tails.begin() + long(j));
            drop_trivial();
            continue;
        }
        break;
    }
    return r;
}

WnlOp adjoint(const WnlOp& l) {
    WnlOp r;
    r.local = adjoint(l.local);
    for (const auto& t : l.tails) r.tails.push_back({-t.q, t.p});
    return canonicalize(r);
}

namespace {

// (c D^k) . (p Dinv q)
WnlOp compose_local_term_tail(const RingElem& c, unsigned k, const Tail& t) {
    WnlOp out;
    if (k == 0) {
        out.tails.push_back({c * t.p, t.q});
        return out;
    }
    RingElem dp = t.p;
    for (unsigned j = 0; j < k; ++j) {
        // c * C(k,j) * p^(j) * D^{k-j-1} . q
        out.local += compose(LocalOp::monomial(c * RingElem(binomial(k, j)) * dp, k - j - 1),
                             LocalOp::mul(t.q));
        dp = total_derivative(dp);
    }
    out.tails.push_back({c * dp, t.q});
    return out;
}

// (p Dinv q) . (c D^k): Dinv f D^k = f D^{k-1} - Dinv f' D^{k-1}
WnlOp compose_tail_local_term(const Tail& t, const RingElem& c, unsigned k) {
    WnlOp out;
    RingElem f = t.q * c;
    bool neg = false;
    for (unsigned i = 0; i < k; ++i) {
        RingElem coeff = t.p * f;
        out.local += LocalOp::monomial(neg ? -coeff : coeff, k - 1 - i);
        f = total_derivative(f);
        neg = !neg;
    }
    out.tails.push_back({neg ? -t.p : t.p, f});
    return out;
}

std::string describe_product(const Tail& a, const Tail& b);

// (p Dinv q) . (r Dinv s) with h = Dinv(q r):
// p h Dinv s - p Dinv (h s)
WnlOp compose_tail_tail(const Tail& a, const Tail& b) {
    Integration h = integrate_total_derivative(a.q * b.p);
    if (!h.ok())
        throw NonIntegrableTailProduct("tail product density " + describe_product(a, b) +
                                       " is not integrable: " + h.status_name());
    WnlOp out;
    out.tails.push_back({a.p * h.value, b.q});
    out.tails.push_back({-a.p, h.value * b.q});
    return out;
}

}  // namespace

WnlOp compose(const WnlOp& l, const WnlOp& m) {
    WnlOp out;
    out.local = compose(l.local, m.local);
    for (const auto& t : m.tails)
        for (int k = 0; k <= l.local.order(); ++k) {
            const RingElem& c = l.local.coeff(unsigned(k));
            if (!c.is_zero()) out += compose_local_term_tail(c, unsigned(k), t);
        }
    for (const auto& t : l.tails)
        for (int k = 0; k <= m.local.order(); ++k) {
            const RingElem& c = m.local.coeff(unsigned(k));
            if (!c.is_zero()) out += compose_tail_local_term(t, c, unsigned(k));
        }
    for (const auto& ta : l.tails)
        for (const auto& tb : m.tails) out += compose_tail_tail(ta, tb);
    return canonicalize(out);
}

RingElem apply(const WnlOp& l, const RingElem& f, const std::vector<RingElem>& constants) {
    RingElem acc = l.local.apply(f);
    for (size_t i = 0; i < l.tails.size(); ++i) {
        const Tail& t = l.tails[i];
        Integration g = integrate_total_derivative(t.q * f);
        if (!g.ok())
            throw TailIntegrationError(int(i), g.status,
                                       "apply: tail " + std::to_string(i) +
                                           " density not integrable: " + g.status_name());
        RingElem c = i < constants.size() ? constants[i] : RingElem();
        acc += t.p * (g.value + c);
    }
    return acc;
}

WnlOp derive_op(const EvolGen& x, const WnlOp& l) {
    WnlOp r;
    std::vector<RingElem> coeffs;
    for (int k = 0; k <= l.local.order(); ++k) coeffs.push_back(evol_apply(x, l.local.coeff(unsigned(k))));
    r.local = LocalOp::from_coeffs(std::move(coeffs));
    for (const auto& t : l.tails) {
        r.tails.push_back({evol_apply(x, t.p), t.q});
        r.tails.push_back({t.p, evol_apply(x, t.q)});
    }
    return canonicalize(r);
}

namespace {

// Laplace expansion along the first row; fine for the tiny matrices here.
RingElem small_det(const std::vector<std::vector<RingElem>>& a) {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    RingElem acc;
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<RingElem>> sub(n - 1);
        for (size_t i = 1; i < n; ++i) {
            sub[i - 1].reserve(n - 1);
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) sub[i - 1].push_back(a[i][jj]);
        }
        RingElem t = a[0][j] * small_det(sub);
        if (j % 2)
            acc -= t;
        else
            acc += t;
    }
    return acc;
}

}  // namespace

LocalOp wronskian_denominator(const std::vector<RingElem>& qs) {
    // adjoint(B) must have the q's in its kernel; the operator
    // f -> W(q_1..q_m, f) does, by expanding the Wronskian determinant
    // along the f-column: coeff_k = (-1)^{m+k} M_k where the minor M_k
    // drops the k-th derivative row (so the leading coefficient M_m is
    // the Wronskian W of the q's themselves). We deliberately do NOT
    // divide through by W to make adjoint(B) monic: the minors are
    // polynomial-sized, while the quotients M_k/W and their derivatives
    // in downstream compositions grow explosively. The result is the
    // monic choice composed on the right with multiplication by W —
    // the same operator up to a right unit, with every kernel and
    // localization property intact.
    size_t m = qs.size();
    if (m == 0) return LocalOp::identity();
    std::vector<std::vector<RingElem>> d(m + 1, std::vector<RingElem>(m));
    for (size_t j = 0; j < m; ++j) {
        d[0][j] = qs[j];
        for (size_t i = 1; i <= m; ++i) d[i][j] = total_derivative(d[i - 1][j]);
    }
    std::vector<RingElem> coeffs(m + 1);
    for (size_t skip = 0; skip <= m; ++skip) {
        std::vector<std::vector<RingElem>> sub;
        sub.reserve(m);
        for (size_t i = 0; i <= m; ++i)
            if (i != skip) sub.push_back(d[i]);
        RingElem mk = small_det(sub);
        coeffs[skip] = (m + skip) % 2 ? -mk : mk;
    }
    if (coeffs[m].is_zero())
        throw DegenerateInput("wronskian_denominator: densities are linearly dependent");
    return adjoint(LocalOp::from_coeffs(std::move(coeffs)));
}

FractionForm fraction_form(const WnlOp& l) {
    WnlOp c = canonicalize(l);
    FractionForm out;
    std::vector<RingElem> qs;
    for (const auto& t : c.tails) qs.push_back(t.q);
    out.b = wronskian_denominator(qs);
    WnlOp prod = compose(c, WnlOp(out.b));
    if (!prod.tails.empty()) throw Error("fraction_form: product failed to localize");
    out.a = prod.local;
    if (right_coprime_certificate(out.a, out.b)) {
        out.rgcd = LocalOp::identity();
        out.coprime = true;
    } else {
        out.rgcd = right_gcd(out.a, out.b);
        out.coprime = out.rgcd.order() == 0;
    }
    return out;
}

namespace {
std::string describe_product(const Tail& a, const Tail& b) {
    // light description; the full expressions can be huge
    return "(#q-terms=" + std::to_string(a.q.num().size()) +
           ", #p-terms=" + std::to_string(b.p.num().size()) + ")";
}
}  // namespace

}  // namespace knv
