#pragma once

// Shared helpers for the test suites: jet shortcuts and seeded random
// generators for polynomials, ring elements, and small operators.

#include <random>
#include <vector>

#include "knv/localop.hpp"
#include "knv/varcalc.hpp"

namespace knvtest {

using namespace knv;

inline RingElem J(unsigned n) { return RingElem::var(VarId::jet(0, n)); }

inline Coeff rat(long n, long d = 1) {
    Coeff c(n);
    c /= Coeff(d);
    return c;
}

class Rand {
  public:
    explicit Rand(uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Coeff rational() {
        long n = integer(-5, 5);
        if (n == 0) n = 1;
        return rat(n, integer(1, 4));
    }

    // Nonzero polynomial in u..u_max_jet (plus parameters when requested).
    Poly poly(unsigned max_jet, int max_terms, unsigned max_exp = 2, bool with_params = false) {
        for (;;) {
            Poly p;
            long n = integer(1, max_terms);
            for (long t = 0; t < n; ++t) {
                Poly term{Coeff(integer(-5, 5))};
                long nv = integer(0, 2);
                for (long v = 0; v < nv; ++v) {
                    VarId id = (with_params && integer(0, 3) == 0)
                                   ? kParamP[size_t(integer(0, 4))]
                                   : VarId::jet(0, unsigned(integer(0, long(max_jet))));
                    term = term * Poly::variable(id, uint32_t(integer(1, long(max_exp))));
                }
                p += term;
            }
            if (!p.is_zero()) return p;
        }
    }

    // Random fraction; denominators are 1, a power of u1, or a small nonzero
    // polynomial, mirroring the shapes the hierarchy produces.
    RingElem elem(unsigned max_jet, int max_terms, bool with_params = false) {
        Poly num = poly(max_jet, max_terms, 2, with_params);
        switch (integer(0, 2)) {
            case 0: return RingElem(std::move(num));
            case 1:
                return RingElem(std::move(num),
                                Poly::variable(VarId::jet(0, 1), uint32_t(integer(1, 2))));
            default: return RingElem(std::move(num), poly(max_jet, 2, 2, false));
        }
    }

    // Random fraction whose denominator is a power of u1 — the denominator
    // shape the hierarchy itself produces. Derivative/bracket chains on these
    // stay cheap, unlike general polynomial denominators.
    RingElem elem1(unsigned max_jet, int max_terms) {
        long k = integer(0, 2);
        Poly den = k == 0 ? Poly{Coeff(1)} : Poly::variable(VarId::jet(0, 1), uint32_t(k));
        return RingElem(poly(max_jet, max_terms, 2, false), std::move(den));
    }

    // Nonzero monomial c * u^a * u1^b. Safe to divide by: its reciprocal (and
    // every derivative of it) keeps a monomial denominator.
    RingElem mono_elem() {
        Poly m{rational()};
        long a = integer(0, 2), b = integer(0, 2);
        if (a) m = m * Poly::variable(VarId::jet(0, 0), uint32_t(a));
        if (b) m = m * Poly::variable(VarId::jet(0, 1), uint32_t(b));
        return RingElem(std::move(m));
    }

    // Polynomial element (no denominator), for integration-friendly inputs.
    RingElem poly_elem(unsigned max_jet, int max_terms) {
        return RingElem(poly(max_jet, max_terms));
    }

    LocalOp local_op(int max_order, unsigned max_jet = 2, int max_terms = 2) {
        std::vector<RingElem> cs(size_t(max_order) + 1);
        bool any = false;
        for (int k = 0; k <= max_order; ++k)
            if (integer(0, 2) != 0) {
                cs[size_t(k)] = elem1(max_jet, max_terms);
                any = true;
            }
        if (!any) cs[size_t(integer(0, max_order))] = elem1(max_jet, max_terms);
        return LocalOp::from_coeffs(std::move(cs));
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace knvtest
