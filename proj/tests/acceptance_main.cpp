// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are part of the criteria and are enforced.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "knv/knov.hpp"
#include "knv/parser.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using namespace knvtest;

namespace {

const Fixtures& fx() {
    static Fixtures f = Fixtures::builtin();
    return f;
}

bool checked_run(const std::string& check, size_t expected, std::string& why) {
    RunMode exact;
    auto reports = run_check(check, fx(), exact);
    if (reports.size() != expected) {
        why = check + ": expected " + std::to_string(expected) + " reports, got " +
              std::to_string(reports.size());
        return false;
    }
    for (const auto& r : reports)
        if (!r.passed()) {
            why = check + " [" + (r.inputs.empty() ? "" : r.inputs[0]) + "]: " + r.verdict +
                  " - " + r.residual_summary;
            return false;
        }
    return true;
}

struct Criterion {
    const char* title;
    double budget_s;
    std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
    std::vector<Criterion> cs;

    cs.push_back({"skew-adjointness of H0, H1, H2 (symbolic P)", 5.0,
                  [](std::string& why) { return checked_run("skew", 3, why); }});

    cs.push_back({"hierarchy commutativity [Gi, Gj] = 0, 0 <= i < j <= 3 (exact)", 600.0,
                  [](std::string& why) { return checked_run("commute", 6, why); }});

    cs.push_back({"differential orders diff_order(Gi) = 2i + 1", 1.0, [](std::string& why) {
                      auto gs = fx().symmetries();
                      for (int i = 0; i < 4; ++i) {
                          auto ord = diff_order(gs[size_t(i)]);
                          if (!ord || *ord != 2 * i + 1) {
                              why = "G" + std::to_string(i) + " has order " +
                                    (ord ? std::to_string(*ord) : "none");
                              return false;
                          }
                      }
                      return true;
                  }});

    cs.push_back({"recursion identities for (L4, G0), (L4, G1), (L6, G0)", 300.0,
                  [](std::string& why) { return checked_run("recursion", 3, why); }});

    cs.push_back({"hamiltonian-on-symmetry identities ({H0,H1,H2} x {G0,G1,G2}, (H0, G3))",
                  600.0, [](std::string& why) { return checked_run("hamiltonian", 10, why); }});

    cs.push_back({"pencil alpha*H0 + beta*H1 + gamma*H2 on G0, G1 (symbolic parameters)", 300.0,
                  [](std::string& why) { return checked_run("pencil", 2, why); }});

    cs.push_back({"bidifferential identity for H0 with indeterminate flows", 60.0,
                  [](std::string& why) { return checked_run("bidifferential", 1, why); }});

    cs.push_back({"hamiltonian roots psi_i = H0inv(G_i) pass the Helmholtz test", 120.0,
                  [](std::string& why) { return checked_run("densities", 3, why); }});

    cs.push_back({"generation: L4(G1) matches G3 mod span, L4(G2) is an order-9 symmetry",
                  900.0, [](std::string& why) { return checked_run("generate", 2, why); }});

    cs.push_back({"fraction forms of H0 and H1 (orders, coprimality, annihilation)", 120.0,
                  [](std::string& why) { return checked_run("fraction", 5, why); }});

    cs.push_back({"randomized invariant suites, >= 100 seeded cases per property", 300.0,
                  [](std::string& why) {
                      for (const auto& r : all_property_suites(0x6b6e7631)) {
                          if (r.cases < 100) {
                              why = r.module + "/" + r.name + ": only " +
                                    std::to_string(r.cases) + " cases";
                              return false;
                          }
                          if (!r.ok()) {
                              why = r.module + "/" + r.name + ": " + r.detail;
                              return false;
                          }
                      }
                      std::string tmpl = "/tmp/knv-acceptance-XXXXXX";
                      char* dir = mkdtemp(tmpl.data());
                      if (!dir) {
                          why = "cannot create scratch directory";
                          return false;
                      }
                      for (const auto& r :
                           cli_contract_properties(KNV_CLI_BIN, KNV_FIXTURE_FILE, dir))
                          if (!r.ok()) {
                              why = r.module + "/" + r.name + ": " + r.detail;
                              return false;
                          }
                      return true;
                  }});

    int failed = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = cs[i].body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && secs > cs[i].budget_s) {
            ok = false;
            why = "over budget";
        }
        std::printf("criterion %2zu/11: %s  %s  (%.2f s, budget %g s)\n", i + 1,
                    ok ? "PASS" : "FAIL", cs[i].title, secs, cs[i].budget_s);
        if (!ok) {
            std::printf("                %s\n", why.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    if (failed) std::printf("%d of 11 acceptance criteria failed\n", failed);
    else std::printf("all 11 acceptance criteria passed\n");
    return failed ? 1 : 0;
}
