#include "knv/varcalc.hpp"

#include <algorithm>

#include "knv/linalg.hpp"

namespace knv {

namespace {

void require_u_only(const RingElem& e, const char* who) {
    for (VarId v : e.vars())
        if (v.is_jet() && v.dep() != 0)
            throw DomainError(std::string(who) + ": auxiliary dependent " + v.name() + " present");
}

std::vector<int> u_jet_orders(const RingElem& e) {
    std::vector<int> out;
    for (VarId v : e.vars())
        if (v.is_jet() && v.dep() == 0) out.push_back(int(v.order()));
    return out;
}

}  // namespace

LocalOp frechet(const RingElem& f) {
    require_u_only(f, "frechet");
    auto orders = u_jet_orders(f);
    if (orders.empty()) return LocalOp();
    int top = *std::max_element(orders.begin(), orders.end());
    std::vector<RingElem> coeffs(size_t(top) + 1);
    for (int n : orders) coeffs[n] = partial_derivative(f, VarId::jet(0, unsigned(n)));
    return LocalOp::from_coeffs(std::move(coeffs));
}

RingElem variational_derivative(const RingElem& f) {
    require_u_only(f, "variational_derivative");
    auto orders = u_jet_orders(f);
    if (orders.empty()) return RingElem();
    int top = *std::max_element(orders.begin(), orders.end());
    // Horner form: f_0 - d(f_1 - d(f_2 - ...))
    RingElem acc;
    for (int n = top; n >= 0; --n)
        acc = partial_derivative(f, VarId::jet(0, unsigned(n))) - total_derivative(acc);
    return acc;
}

RingElem evol_apply(const EvolGen& x, const RingElem& e) {
    auto orders = u_jet_orders(e);
    if (orders.empty()) return RingElem();
    std::sort(orders.begin(), orders.end());
    RingElem acc;
    RingElem fn = x.gen;
    int cur = 0;
    for (int n : orders) {
        while (cur < n) {
            fn = total_derivative(fn);
            ++cur;
        }
        acc += fn * partial_derivative(e, VarId::jet(0, unsigned(n)));
    }
    return acc;
}

RingElem lie_bracket(const RingElem& f, const RingElem& g) {
    require_u_only(f, "lie_bracket");
    require_u_only(g, "lie_bracket");
    return evol_apply({f}, g) - evol_apply({g}, f);
}

ProductSum lie_bracket_terms(const RingElem& f, const RingElem& g) {
    require_u_only(f, "lie_bracket");
    require_u_only(g, "lie_bracket");
    ProductSum s;
    auto half = [&s](const RingElem& a, const RingElem& b, bool negate) {
        auto orders = u_jet_orders(b);
        std::sort(orders.begin(), orders.end());
        RingElem an = negate ? -a : a;
        int cur = 0;
        for (int n : orders) {
            while (cur < n) {
                an = total_derivative(an);
                ++cur;
            }
            s.add(an, partial_derivative(b, VarId::jet(0, unsigned(n))));
        }
    };
    half(f, g, false);
    half(g, f, true);
    return s;
}

LocalOp op_frechet(const LocalOp& pop, const RingElem& f) {
    std::vector<RingElem> out;
    RingElem fk = f;
    for (int k = 0; k <= pop.order(); ++k) {
        if (k > 0) fk = total_derivative(fk);
        const RingElem& ck = pop.coeff(unsigned(k));
        if (ck.is_zero()) continue;
        for (int n : u_jet_orders(ck)) {
            if (size_t(n) >= out.size()) out.resize(size_t(n) + 1);
            out[n] += partial_derivative(ck, VarId::jet(0, unsigned(n))) * fk;
        }
    }
    return LocalOp::from_coeffs(std::move(out));
}

bool is_variational(const RingElem& psi) {
    require_u_only(psi, "is_variational");
    LocalOp d = frechet(psi);
    return (d - adjoint(d)).is_zero();
}

// ---------------------------------------------------------------------------
// Univariate rational integration (Ostrogradsky)

namespace {

using UPoly = std::vector<RingElem>;  // index = degree in x; coefficients x-free

int udeg(const UPoly& u) {
    int d = int(u.size()) - 1;
    while (d >= 0 && u[d].is_zero()) --d;
    return d;
}

void utrim(UPoly& u) { u.resize(size_t(udeg(u) + 1)); }

UPoly uscale(UPoly u, const RingElem& c) {
    for (auto& x : u) x *= c;
    return u;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly uderiv(const UPoly& a) {
    UPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * RingElem(long(i)));
    utrim(r);
    return r;
}

std::pair<UPoly, UPoly> udivrem(UPoly a, const UPoly& b) {
    utrim(a);
    int db = udeg(b);
    if (db < 0) throw DomainError("univariate division by zero");
    int da = udeg(a);
    UPoly q(da >= db ? size_t(da - db + 1) : 0);
    RingElem lb_inv = b[db].inverse();
    while (da >= db) {
        RingElem c = a[da] * lb_inv;
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        a.resize(size_t(da));  // top coefficient cancels exactly
        da = udeg(a);
        a.resize(size_t(da + 1));
    }
    return {std::move(q), std::move(a)};
}

UPoly udivexact(const UPoly& a, const UPoly& b) {
    auto [q, r] = udivrem(a, b);
    if (udeg(r) >= 0) throw Error("univariate division not exact");
    return q;
}

UPoly umonic(UPoly a) {
    int d = udeg(a);
    if (d < 0) return {};
    a.resize(size_t(d + 1));
    RingElem inv = a[size_t(d)].inverse();
    return uscale(std::move(a), inv);
}

UPoly ugcd(UPoly a, UPoly b) {
    a = umonic(std::move(a));
    b = umonic(std::move(b));
    while (!b.empty()) {
        auto [q, r] = udivrem(a, b);
        a = std::move(b);
        b = umonic(std::move(r));
    }
    return a;
}

UPoly upoly_of(const Poly& p, VarId x) {
    UPoly out(p.degree_in(x) + 1);
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : p.terms()) {
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
    for (size_t i = 0; i < out.size(); ++i) out[i] = RingElem(Poly::from_terms(std::move(buckets[i])));
    return out;
}

RingElem to_ring(const UPoly& u, VarId x) {
    RingElem acc;
    RingElem xv = RingElem::var(x);
    for (size_t i = u.size(); i-- > 0;) acc = acc * xv + u[i];
    return acc;
}

}  // namespace

UnivIntegration integrate_univariate(const RingElem& f, VarId x) {
    UnivIntegration out;
    if (f.is_zero()) return out;
    UPoly num = upoly_of(f.num(), x);
    UPoly den = upoly_of(f.den(), x);
    utrim(num);
    utrim(den);
    // monic denominator in x
    RingElem lc = den.back();
    num = uscale(std::move(num), lc.inverse());
    den = uscale(std::move(den), lc.inverse());

    auto [s, r] = udivrem(std::move(num), den);
    RingElem xv = RingElem::var(x);
    for (size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_zero()) out.value += s[i] * xv.pow(long(i + 1)) / RingElem(long(i + 1));
    if (udeg(r) < 0) return out;

    if (udeg(den) == 0) throw Error("integrate_univariate: remainder with constant denominator");
    UPoly q1 = ugcd(den, uderiv(den));
    if (udeg(q1) == 0) {
        out.logarithmic = true;  // squarefree denominator, nonzero remainder
        return out;
    }
    UPoly q2 = udivexact(den, q1);
    UPoly h = udivexact(umul(uderiv(q1), q2), q1);
    int d1 = udeg(q1), d2 = udeg(q2);
    int cols = d1 + d2;
    // unknowns: r1 (deg < d1) then r2 (deg < d2); match coefficients of
    // r = r1'*q2 - r1*h + r2*q1
    std::vector<std::vector<RingElem>> m(size_t(cols), std::vector<RingElem>{});
    for (auto& row : m) row.resize(size_t(cols));
    auto add_col = [&](int col, const UPoly& contrib) {
        for (int row = 0; row < cols && row < int(contrib.size()); ++row)
            m[size_t(row)][size_t(col)] += contrib[size_t(row)];
    };
    for (int i = 0; i < d1; ++i) {
        UPoly xi(size_t(i) + 1);
        xi[size_t(i)] = RingElem(1);
        UPoly contrib = umul(uderiv(xi), q2);
        UPoly minus = umul(xi, h);
        contrib.resize(std::max(contrib.size(), minus.size()));
        for (size_t k = 0; k < minus.size(); ++k) contrib[k] -= minus[k];
        add_col(i, contrib);
    }
    for (int j = 0; j < d2; ++j) {
        UPoly xj(size_t(j) + 1);
        xj[size_t(j)] = RingElem(1);
        add_col(d1 + j, umul(xj, q1));
    }
    std::vector<RingElem> rhs;
    rhs.resize(size_t(cols));
    for (int row = 0; row < cols && row < int(r.size()); ++row) rhs[size_t(row)] = r[size_t(row)];
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) throw Error("integrate_univariate: Ostrogradsky system was singular");
    UPoly r1(sol->begin(), sol->begin() + d1);
    UPoly r2(sol->begin() + d1, sol->end());
    utrim(r1);
    utrim(r2);
    if (!r1.empty()) out.value += to_ring(r1, x) / to_ring(q1, x);
    if (udeg(r2) >= 0) out.logarithmic = true;
    return out;
}

Integration integrate_total_derivative(const RingElem& f) {
    require_u_only(f, "integrate_total_derivative");
    Integration out;
    if (f.is_zero()) return out;
    if (!is_zero(variational_derivative(f))) {
        out.status = Integration::Status::not_total_derivative;
        return out;
    }
    RingElem cur = f;
    while (!cur.is_zero()) {
        auto ord = diff_order(cur);
        if (!ord || *ord == 0) {
            // Euler-closed elements of order <= 0 are parameter constants
            out.status = Integration::Status::residual;
            out.residual = cur;
            return out;
        }
        unsigned n = unsigned(*ord);
        RingElem a = partial_derivative(cur, VarId::jet(0, n));
        if (a.vars().count(VarId::jet(0, n)))
            throw Error("integrate_total_derivative: integrand not affine in its top jet");
        UnivIntegration ui = integrate_univariate(a, VarId::jet(0, n - 1));
        if (ui.logarithmic) {
            out.status = Integration::Status::logarithmic;
            return out;
        }
        out.value += ui.value;
        cur -= total_derivative(ui.value);
        if (auto ord2 = diff_order(cur); ord2 && *ord2 >= int(n))
            throw Error("integrate_total_derivative: no progress");
    }
    return out;
}

const char* Integration::status_name() const {
    switch (status) {
        case Status::ok: return "ok";
        case Status::not_total_derivative: return "not_a_total_derivative";
        case Status::logarithmic: return "obstruction_logarithmic";
        case Status::residual: return "obstruction_residual";
    }
    return "?";
}

}  // namespace knv
