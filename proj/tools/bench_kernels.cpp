// Benchmarks the OpenMP kernels against their serial references: sparse
// polynomial products and batched modular evaluation.
#include <chrono>
#include <cstdio>
#include <random>

#include "knv/poly.hpp"

using namespace knv;

namespace {

Poly random_poly(std::mt19937_64& rng, int nterms, int nvars, int maxexp) {
    std::vector<Term> terms;
    std::uniform_int_distribution<int> var(0, nvars - 1), exp(0, maxexp);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        for (int v = 0; v < nvars; ++v) {
            int e = exp(rng);
            if (e > 0) {
                m.e.emplace_back(VarId::jet(0, unsigned(v)).raw, unsigned(e));
                m.deg += unsigned(e);
            }
        }
        long c = coeff(rng);
        if (c == 0) c = 1;
        terms.push_back({std::move(m), Coeff(c)});
    }
    return Poly::from_terms(std::move(terms));
}

template <typename F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
    std::mt19937_64 rng(42);

    std::printf("%-34s %10s %10s %8s %7s\n", "case", "serial[s]", "openmp[s]", "speedup", "match");

    for (int n : {200, 500, 1000}) {
        Poly a = random_poly(rng, n, 6, 4);
        Poly b = random_poly(rng, n, 6, 4);
        Poly ps, pp;
        double ts = time_s([&] { ps = kernels::mul_serial(a, b); });
        double tp = time_s([&] { pp = kernels::mul_parallel(a, b); });
        char label[64];
        std::snprintf(label, sizeof label, "mul %d x %d terms", int(a.size()), int(b.size()));
        std::printf("%-34s %10.3f %10.3f %8.2f %7s\n", label, ts, tp, ts / tp,
                    ps == pp ? "yes" : "NO");
    }

    {
        Poly p = random_poly(rng, 2000, 8, 5);
        std::uniform_int_distribution<uint64_t> pt(1, modp::kPrime - 1);
        std::vector<std::map<uint32_t, uint64_t>> points(20000);
        for (auto& m : points)
            for (int v = 0; v < 8; ++v) m[VarId::jet(0, unsigned(v)).raw] = pt(rng);
        std::vector<uint64_t> rs, rp;
        double ts = time_s([&] { rs = kernels::eval_batch_serial(p, points); });
        double tp = time_s([&] { rp = kernels::eval_batch_parallel(p, points); });
        std::printf("%-34s %10.3f %10.3f %8.2f %7s\n", "eval 2000 terms x 20000 points", ts, tp,
                    ts / tp, rs == rp ? "yes" : "NO");
    }
    return 0;
}
