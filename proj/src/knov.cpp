#include "knv/knov.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "knv/parser.hpp"

namespace knv {

namespace {

RingElem J(unsigned n) { return RingElem::var(VarId::jet(0, n)); }

RingElem Q(long n, long d) {
    Coeff c(n, d);
    c.canonicalize();
    return RingElem(c);
}

LocalOp make_h0inv() {
    RingElem u1 = J(1);
    return compose(compose(LocalOp::mul(u1.inverse()), LocalOp::d()), LocalOp::mul(u1.inverse()));
}

}  // namespace

Fixtures Fixtures::builtin() {
    RingElem u1 = J(1), u2 = J(2), u3 = J(3), u4 = J(4), u5 = J(5), u6 = J(6), u7 = J(7);
    RingElem P = PolyP::P(), Pu = PolyP::Pu(), Puu = PolyP::Puu(), Puuu = PolyP::Puuu(),
             Puuuu = PolyP::Puuuu();

    Fixtures fx;
    fx.G0 = u1;
    fx.G1 = u3 - Q(3, 2) * u2 * u2 / u1 + P / u1;
    fx.G2 = u5 - Q(5, 1) * u4 * u2 / u1 - Q(5, 2) * u3 * u3 / u1 + Q(25, 2) * u3 * u2 * u2 / (u1 * u1)
          - Q(45, 8) * u2.pow(4) / u1.pow(3) - Q(5, 3) * P * u3 / u1.pow(2)
          + Q(25, 6) * P * u2 * u2 / u1.pow(3) - Q(5, 3) * Pu * u2 / u1
          - Q(5, 18) * P * P / u1.pow(3) + Q(5, 9) * u1 * Puu;
    // Two transcription corrections relative to the printed G3, both pinned by
    // lie_bracket(G1, G3) = 0 and by cross-generation from L4(G1): the
    // (21/2)(2P - 11 u2^2) u4 term carries u2/u1^3 (not 1/u1^3), and the
    // (91/3) Pu u2 u3 / u1^2 term enters with a plus sign.
    fx.G3 = u7 - RingElem(7) * u2 * u6 / u1
          - Q(7, 6) * (u5 / u1.pow(2)) * (RingElem(2) * P + RingElem(12) * u3 * u1 - RingElem(27) * u2 * u2)
          - Q(21, 2) * u4 * u4 / u1
          + Q(21, 2) * (u4 * u2 / u1.pow(3)) * (RingElem(2) * P - RingElem(11) * u2 * u2)
          - Q(7, 3) * (u4 / u1.pow(2)) * (RingElem(2) * Pu * u1 - RingElem(51) * u2 * u3)
          + Q(49, 2) * u3.pow(3) / u1.pow(2)
          + Q(7, 12) * (u3 * u3 / u1.pow(3)) * (RingElem(22) * P - RingElem(417) * u2 * u2)
          + Q(2499, 8) * (u2.pow(4) / u1.pow(4)) * u3
          + Q(91, 3) * Pu * (u2 / u1.pow(2)) * u3
          - Q(595, 6) * P * (u2 * u2 / u1.pow(4)) * u3
          - Q(35, 18) * (u3 / u1.pow(4)) * (RingElem(2) * Puu * u1.pow(4) - P * P)
          - Q(1575, 16) * u2.pow(6) / u1.pow(5)
          + Q(1813, 24) * (u2.pow(4) / u1.pow(5)) * P
          - Q(203, 6) * (u2.pow(3) / u1.pow(3)) * Pu
          + Q(49, 36) * (u2 * u2 / u1.pow(5)) * (RingElem(6) * Puu * u1.pow(4) - RingElem(5) * P * P)
          - Q(7, 9) * (u2 / u1.pow(3)) * (RingElem(2) * Puuu * u1.pow(4) - RingElem(5) * P * Pu)
          + Q(7, 54) * P.pow(3) / u1.pow(5) - Q(7, 9) * Puu * P / u1 + Q(7, 9) * Puuuu * u1.pow(3)
          - Q(7, 18) * Pu * Pu / u1;

    fx.H0 = WnlOp::tail(u1, u1);

    RingElem q = RingElem(2) * u3 * u1 - Q(9, 2) * u2 * u2 - Q(2, 3) * P;
    fx.H1.local = compose(LocalOp::mul(u1 * u1 / RingElem(2)), LocalOp::d(3))
                + compose(LocalOp::d(3), LocalOp::mul(u1 * u1 / RingElem(2)))
                + compose(LocalOp::mul(q), LocalOp::d()) + compose(LocalOp::d(), LocalOp::mul(q));
    fx.H1.tails = {{fx.G1, fx.G1}, {u1, fx.G2}, {fx.G2, u1}};

    RingElem R = RingElem(3) * u3 * u1 - Q(19, 2) * u2 * u2 - P;
    // Transcription correction in S relative to the printed H2: the -9 u3 u2
    // term is -9 u4 u2 (x-scaling weight and skew-adjointness both pin it).
    RingElem S = u5 * u1 - RingElem(9) * u4 * u2 + Q(19, 2) * u3 * u3
               - Q(2, 3) * (u3 / u1) * (RingElem(5) * P - RingElem(39) * u2 * u2)
               + (u2 * u2 / (u1 * u1)) * (RingElem(5) * P - RingElem(9) * u2 * u2)
               + Q(2, 3) * P * P / (u1 * u1) + u1 * u1 * Puu;
    fx.H2.local = compose(LocalOp::mul(u1 * u1 / RingElem(2)), LocalOp::d(5))
                + compose(LocalOp::d(5), LocalOp::mul(u1 * u1 / RingElem(2)))
                + compose(LocalOp::mul(R), LocalOp::d(3)) + compose(LocalOp::d(3), LocalOp::mul(R))
                + compose(LocalOp::mul(S), LocalOp::d()) + compose(LocalOp::d(), LocalOp::mul(S));
    fx.H2.tails = {{fx.G1, fx.G2}, {fx.G2, fx.G1}, {u1, fx.G3}, {fx.G3, u1}};

    fx.H0inv = make_h0inv();
    fx.L4 = compose(fx.H1, WnlOp(fx.H0inv));
    fx.L6 = compose(fx.H2, WnlOp(fx.H0inv));
    fx.checksum = fnv1a_hex(fixture_text(fx));
    return fx;
}

std::string fixture_text(const Fixtures& f) {
    std::ostringstream os;
    os << "G0 = " << format(f.G0) << "\n";
    os << "G1 = " << format(f.G1) << "\n";
    os << "G2 = " << format(f.G2) << "\n";
    os << "G3 = " << format(f.G3) << "\n";
    os << "H0 = " << format(f.H0) << "\n";
    os << "H1 = " << format(f.H1) << "\n";
    os << "H2 = " << format(f.H2) << "\n";
    return os.str();
}

Fixtures Fixtures::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file: " + path);
    std::map<std::string, std::string> defs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("fixture line is not a definition", lineno, 1);
        std::string name = line.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        defs[name] = line.substr(eq + 1);
    }
    for (const char* key : {"G0", "G1", "G2", "G3", "H0", "H1", "H2"})
        if (!defs.count(key)) throw Error("fixture file is missing " + std::string(key));

    Fixtures fx;
    fx.G0 = parse(defs["G0"]);
    fx.G1 = parse(defs["G1"]);
    fx.G2 = parse(defs["G2"]);
    fx.G3 = parse(defs["G3"]);
    fx.H0 = parse_operator(defs["H0"]);
    fx.H1 = parse_operator(defs["H1"]);
    fx.H2 = parse_operator(defs["H2"]);
    fx.H0inv = make_h0inv();
    fx.L4 = compose(fx.H1, WnlOp(fx.H0inv));
    fx.L6 = compose(fx.H2, WnlOp(fx.H0inv));
    fx.checksum = fnv1a_hex(fixture_text(fx));
    return fx;
}

WnlOp Fixtures::pencil() const {
    return canonicalize(H0.scaled(RingElem::var(kParamAlpha)) +
                        H1.scaled(RingElem::var(kParamBeta)) +
                        H2.scaled(RingElem::var(kParamGamma)));
}

namespace {

WnlOp substituted(const WnlOp& l, const std::map<VarId, Coeff>& a) {
    WnlOp r;
    std::vector<RingElem> coeffs;
    for (int k = 0; k <= l.local.order(); ++k) coeffs.push_back(l.local.coeff(unsigned(k)).substituted(a));
    r.local = LocalOp::from_coeffs(std::move(coeffs));
    for (const auto& t : l.tails) r.tails.push_back({t.p.substituted(a), t.q.substituted(a)});
    return canonicalize(r);
}

}  // namespace

Fixtures Fixtures::specialized(const std::map<VarId, Coeff>& a) const {
    Fixtures fx;
    fx.G0 = G0.substituted(a);
    fx.G1 = G1.substituted(a);
    fx.G2 = G2.substituted(a);
    fx.G3 = G3.substituted(a);
    fx.H0 = substituted(H0, a);
    fx.H1 = substituted(H1, a);
    fx.H2 = substituted(H2, a);
    fx.H0inv = H0inv;
    fx.L4 = substituted(L4, a);
    fx.L6 = substituted(L6, a);
    fx.checksum = fnv1a_hex(fixture_text(fx));
    return fx;
}

// --- identity residuals ------------------------------------------------------

WnlOp recursion_residual(const WnlOp& l, const RingElem& f) {
    LocalOp df = frechet(f);
    return canonicalize(derive_op({f}, l) - (compose(WnlOp(df), l) - compose(l, WnlOp(df))));
}

WnlOp hamiltonian_residual(const WnlOp& l, const RingElem& e) {
    LocalOp de = frechet(e);
    return canonicalize(derive_op({e}, l) - compose(WnlOp(de), l) - compose(l, WnlOp(adjoint(de))));
}

LocalOp fraction_identity_residual(const LocalOp& a, const LocalOp& b, const RingElem& e) {
    LocalOp de = frechet(e);
    auto xe = [&e](const LocalOp& op) { return derive_op({e}, WnlOp(op)).local; };
    LocalOp lhs = compose(adjoint(a), xe(b) + compose(adjoint(de), b));
    LocalOp rhs = compose(adjoint(b), compose(de, a) - xe(a));
    return lhs - rhs;
}

RingElem bidifferential_residual(const LocalOp& a, const LocalOp& b) {
    RingElem f = RingElem::var(VarId::jet(1, 0));
    RingElem g = RingElem::var(VarId::jet(2, 0));
    RingElem af = a.apply(f), ag = a.apply(g);
    RingElem bf = b.apply(f);
    EvolGen xaf{af}, xag{ag};
    RingElem t1 = derive_op(xag, WnlOp(b)).local.apply(f);
    RingElem t2 = derive_op(xaf, WnlOp(b)).local.apply(g);
    RingElem t3 = adjoint(op_frechet(a, g)).apply(bf);
    RingElem t4 = adjoint(op_frechet(b, g)).apply(af);
    RingElem lhs = adjoint(a).apply(t1 - t2 + t3 + t4);
    RingElem rhs = adjoint(b).apply(derive_op(xaf, WnlOp(a)).local.apply(g) -
                                    derive_op(xag, WnlOp(a)).local.apply(f));
    return lhs - rhs;
}

RingElem next_symmetry(const WnlOp& l, const RingElem& g, const std::vector<RingElem>& constants) {
    return apply(l, g, constants);
}

HamiltonianRoot hamiltonian_root(const LocalOp& h0inv, const RingElem& g) {
    RingElem psi = h0inv.apply(g);
    return {psi, is_variational(psi)};
}

// --- check runner ------------------------------------------------------------

namespace {

struct Runner {
    const Fixtures& fx;
    RunMode mode;
    std::mt19937_64 rng;
    std::vector<Report> out;

    Runner(const Fixtures& f, const RunMode& m) : fx(f), mode(m), rng(m.seed) {}

    bool ring_zero(const RingElem& e) {
        if (!mode.probabilistic) return e.is_zero();
        return is_zero_probabilistic(e, mode.trials, rng);
    }

    bool wnl_zero(const WnlOp& l, WnlOp* canon = nullptr) {
        WnlOp c = canonicalize(l);
        if (canon) *canon = c;
        if (!c.tails.empty()) return false;
        if (!mode.probabilistic) return c.local.is_zero();
        for (int k = 0; k <= c.local.order(); ++k)
            if (!ring_zero(c.local.coeff(unsigned(k)))) return false;
        return true;
    }

    std::string prob_witness() const {
        return "nonzero under probabilistic evaluation (trials=" + std::to_string(mode.trials) +
               ", seed=" + std::to_string(mode.seed) + ")";
    }

    // Runs one item; body returns (pass, summary); exceptions become errors.
    void item(const std::string& check, std::vector<std::string> inputs,
              const std::function<std::pair<bool, std::string>()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        Report r;
        r.check = check;
        r.inputs = std::move(inputs);
        r.mode = mode.name();
        r.fixture_checksum = fx.checksum;
        try {
            auto [pass, summary] = body();
            r.verdict = pass ? "pass" : "fail";
            r.residual_summary = std::move(summary);
            if (!pass && r.residual_summary.empty()) r.residual_summary = prob_witness();
        } catch (const Error& err) {
            r.verdict = "error";
            r.residual_summary = err.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(r));
    }

    std::string named(const std::string& name, const RingElem& e) { return name + " = " + format(e); }
    std::string named(const std::string& name, const WnlOp& l) { return name + " = " + format(l); }
    std::string named(const std::string& name, const LocalOp& l) { return name + " = " + format(l); }

    void skew() {
        const std::pair<const char*, const WnlOp*> ops[] = {{"H0", &fx.H0}, {"H1", &fx.H1}, {"H2", &fx.H2}};
        for (auto [name, op] : ops)
            item("skew", {named(name, *op)}, [this, op] {
                WnlOp canon;
                bool ok = wnl_zero(*op + adjoint(*op), &canon);
                return std::make_pair(ok, ok ? std::string() : format(canon));
            });
    }

    void commute() {
        auto gs = fx.symmetries();
        const char* names[] = {"G0", "G1", "G2", "G3"};
        for (size_t i = 0; i < gs.size(); ++i)
            for (size_t j = i + 1; j < gs.size(); ++j)
                item("commute", {named(names[i], gs[i]), named(names[j], gs[j])}, [this, &gs, i, j] {
                    if (mode.probabilistic) {
                        bool ok = is_zero_probabilistic(lie_bracket_terms(gs[i], gs[j]), mode.trials, rng);
                        return std::make_pair(ok, std::string());
                    }
                    RingElem b = lie_bracket(gs[i], gs[j]);
                    return std::make_pair(b.is_zero(), b.is_zero() ? std::string() : format(b));
                });
    }

    void recursion() {
        const std::tuple<const char*, const WnlOp*, const char*, const RingElem*> cases[] = {
            {"L4", &fx.L4, "G0", &fx.G0}, {"L4", &fx.L4, "G1", &fx.G1}, {"L6", &fx.L6, "G0", &fx.G0}};
        for (auto [ln, l, fn, f] : cases)
            item("recursion", {named(ln, *l), named(fn, *f)}, [this, l, f] {
                WnlOp canon;
                bool ok = wnl_zero(recursion_residual(*l, *f), &canon);
                return std::make_pair(ok, ok ? std::string() : format(canon));
            });
    }

    void hamiltonian() {
        const std::pair<const char*, const WnlOp*> hs[] = {{"H0", &fx.H0}, {"H1", &fx.H1}, {"H2", &fx.H2}};
        auto gs = fx.symmetries();
        const char* gn[] = {"G0", "G1", "G2", "G3"};
        for (auto [hname, h] : hs)
            for (size_t j = 0; j < 3; ++j)
                item("hamiltonian", {named(hname, *h), named(gn[j], gs[j])}, [this, h, &gs, j] {
                    WnlOp canon;
                    bool ok = wnl_zero(hamiltonian_residual(*h, gs[j]), &canon);
                    return std::make_pair(ok, ok ? std::string() : format(canon));
                });
        item("hamiltonian", {named("H0", fx.H0), named("G3", fx.G3)}, [this] {
            WnlOp canon;
            bool ok = wnl_zero(hamiltonian_residual(fx.H0, fx.G3), &canon);
            return std::make_pair(ok, ok ? std::string() : format(canon));
        });
    }

    void fraction() {
        RingElem u1 = J(1);
        LocalOp a0 = LocalOp::mul(u1);
        LocalOp b0 = compose(LocalOp::mul(u1.inverse()), LocalOp::d());
        item("fraction", {named("H0", fx.H0)}, [this, &a0, &b0, &u1] {
            FractionForm ff = fraction_form(fx.H0);
            if (ff.a.order() != 0 || ff.b.order() != 1)
                return std::make_pair(false, "unexpected orders: A " + std::to_string(ff.a.order()) +
                                                 ", B " + std::to_string(ff.b.order()));
            if (!ff.coprime) return std::make_pair(false, "right gcd " + format(ff.rgcd));
            // right-unit equivalence with (u1, u1^-1 D): B = (u1^-1 D) U and
            // A = u1 U for the same order-0 unit U. B = b0∘U is equivalent to
            // adjoint(B) = adjoint(U)∘adjoint(b0), which right_divide can test.
            auto [q, rem] = right_divide(adjoint(ff.b), adjoint(b0));
            if (!rem.is_zero() || q.order() != 0)
                return std::make_pair(false, std::string("B is not a right multiple of u1^-1*D"));
            LocalOp unit = adjoint(q);
            if (!(ff.a == compose(LocalOp::mul(u1), unit)))
                return std::make_pair(false, std::string("A does not match u1 times the unit"));
            return std::make_pair(true, std::string("A = ") + format(ff.a) + "; B = " + format(ff.b));
        });
        item("fraction", {named("H1", fx.H1)}, [this, &u1] {
            FractionForm ff = fraction_form(fx.H1);
            if (ff.a.order() != 6 || ff.b.order() != 3)
                return std::make_pair(false, "unexpected orders: A " + std::to_string(ff.a.order()) +
                                                 ", B " + std::to_string(ff.b.order()));
            if (!ff.coprime) return std::make_pair(false, "right gcd " + format(ff.rgcd));
            LocalOp bstar = adjoint(ff.b);
            for (const RingElem* g : {&fx.G1, &fx.G2, static_cast<const RingElem*>(&u1)})
                if (!bstar.apply(*g).is_zero())
                    return std::make_pair(false,
                                          std::string("adjoint(B) does not annihilate a tail density"));
            return std::make_pair(true, std::string("orders (6, 3), right coprime"));
        });
        auto gs = fx.symmetries();
        const char* gn[] = {"G0", "G1", "G2"};
        for (size_t j = 0; j < 3; ++j)
            item("fraction", {named("A", a0), named("B", b0), named(gn[j], gs[j])},
                 [this, &a0, &b0, &gs, j] {
                     LocalOp res = fraction_identity_residual(a0, b0, gs[j]);
                     bool ok = wnl_zero(WnlOp(res));
                     return std::make_pair(ok, ok ? std::string() : format(res));
                 });
    }

    void bidifferential() {
        RingElem u1 = J(1);
        LocalOp a0 = LocalOp::mul(u1);
        LocalOp b0 = compose(LocalOp::mul(u1.inverse()), LocalOp::d());
        item("bidifferential", {named("A", a0), named("B", b0)}, [this, &a0, &b0] {
            RingElem res = bidifferential_residual(a0, b0);
            bool ok = ring_zero(res);
            return std::make_pair(ok, ok ? std::string() : format(res));
        });
    }

    void densities() {
        auto gs = fx.symmetries();
        const char* gn[] = {"G0", "G1", "G2", "G3"};
        for (size_t i = 1; i <= 3; ++i)
            item("densities", {named(gn[i], gs[i])}, [this, &gs, i] {
                HamiltonianRoot root = hamiltonian_root(fx.H0inv, gs[i]);
                return std::make_pair(root.helmholtz,
                                      root.helmholtz ? "psi = " + format(root.psi)
                                                     : "Helmholtz test failed for psi = " + format(root.psi));
            });
    }

    void pencil() {
        WnlOp lp = fx.pencil();
        auto gs = fx.symmetries();
        const char* gn[] = {"G0", "G1"};
        for (size_t j = 0; j < 2; ++j)
            item("pencil", {named("L", lp), named(gn[j], gs[j])}, [this, &lp, &gs, j] {
                WnlOp canon;
                bool ok = wnl_zero(hamiltonian_residual(lp, gs[j]), &canon);
                return std::make_pair(ok, ok ? std::string() : format(canon));
            });
    }

    void generate() {
        item("generate", {named("L4", fx.L4), named("G1", fx.G1)}, [this] {
            RingElem k = next_symmetry(fx.L4, fx.G1);
            auto span = solve_constant_span(k, fx.symmetries());
            if (!span) return std::make_pair(false, "L4(G1) is not in span(G0..G3): " + format(k));
            if ((*span)[3].is_zero())
                return std::make_pair(false, std::string("L4(G1) has no G3 component"));
            std::string s = "L4(G1) = ";
            const char* gn[] = {"G0", "G1", "G2", "G3"};
            bool first = true;
            for (size_t i = 0; i < 4; ++i) {
                if ((*span)[i].is_zero()) continue;
                if (!first) s += " + ";
                s += "(" + format((*span)[i]) + ")*" + gn[i];
                first = false;
            }
            return std::make_pair(true, s);
        });
        item("generate", {named("L4", fx.L4), named("G2", fx.G2)}, [this] {
            RingElem k = next_symmetry(fx.L4, fx.G2);
            auto ord = diff_order(k);
            if (!ord || *ord != 9)
                return std::make_pair(false,
                                      "expected differential order 9, got " +
                                          (ord ? std::to_string(*ord) : std::string("none")));
            // the bracket certificate runs probabilistically regardless of
            // mode: K reaches u_12 and the exact bracket is impractically large
            std::mt19937_64 local_rng(mode.seed);
            int trials = std::max(mode.trials, 40);
            bool ok = is_zero_probabilistic(lie_bracket_terms(k, fx.G1), trials, local_rng);
            return std::make_pair(
                ok, ok ? "order-9 symmetry; [K, G1] = 0 (probabilistic, trials=" + std::to_string(trials) + ")"
                       : prob_witness());
        });
    }

    void fixtures() {
        item("fixtures", {"G0", "G1", "G2", "G3", "H0", "H1", "H2"}, [this] {
            auto gs = fx.symmetries();
            const char* gn[] = {"G0", "G1", "G2", "G3"};
            for (size_t i = 0; i < 4; ++i) {
                auto ord = diff_order(gs[i]);
                if (!ord || *ord != int(2 * i + 1))
                    return std::make_pair(false, std::string(gn[i]) + " has differential order " +
                                                     (ord ? std::to_string(*ord) : std::string("none")) +
                                                     ", expected " + std::to_string(2 * i + 1));
            }
            RingElem u1 = J(1);
            if (fx.H2.local.order() != 5 || !(fx.H2.local.leading() == u1 * u1))
                return std::make_pair(false, std::string("H2 local part does not match (1/2)(u1^2 D^5 + D^5 u1^2) + ..."));
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = i + 1; j < 4; ++j) {
                    bool ok;
                    if (mode.probabilistic || (i >= 2 && j == 3)) {
                        std::mt19937_64 local_rng(mode.seed + i * 4 + j);
                        ok = is_zero_probabilistic(lie_bracket_terms(gs[i], gs[j]),
                                                   std::max(mode.trials, 40), local_rng);
                    } else {
                        ok = lie_bracket(gs[i], gs[j]).is_zero();
                    }
                    if (!ok)
                        return std::make_pair(false, std::string("lie_bracket(") + gn[i] + ", " + gn[j] +
                                                         ") is nonzero");
                }
            RingElem k = next_symmetry(fx.L4, fx.G1);
            auto span = solve_constant_span(k, gs);
            if (!span || (*span)[3].is_zero())
                return std::make_pair(false, std::string("cross-generation of G3 from L4(G1) failed"));
            std::string s = "cross-generation constants (G0..G3): ";
            for (size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + format((*span)[i]);
            return std::make_pair(true, s);
        });
    }
};

}  // namespace

std::vector<Report> run_check(const std::string& check, const Fixtures& fx, const RunMode& mode) {
    Runner r(fx, mode);
    if (check == "skew") r.skew();
    else if (check == "commute") r.commute();
    else if (check == "recursion") r.recursion();
    else if (check == "hamiltonian") r.hamiltonian();
    else if (check == "fraction") r.fraction();
    else if (check == "bidifferential") r.bidifferential();
    else if (check == "densities") r.densities();
    else if (check == "pencil") r.pencil();
    else if (check == "generate") r.generate();
    else if (check == "fixtures") r.fixtures();
    else if (check == "all") {
        // report order is by check id
        r.bidifferential();
        r.commute();
        r.densities();
        r.fixtures();
        r.fraction();
        r.generate();
        r.hamiltonian();
        r.pencil();
        r.recursion();
        r.skew();
    } else {
        throw DomainError("unknown check: " + check);
    }
    return std::move(r.out);
}

}  // namespace knv
