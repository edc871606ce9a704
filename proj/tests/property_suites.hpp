#pragma once

// Randomized invariant suites for every module, shared between the doctest
// binaries and the acceptance runner. Each property runs a fixed number of
// seeded cases and reports the first failure verbatim.

#include <cstdint>
#include <string>
#include <vector>

namespace knvtest {

struct PropertyResult {
    std::string module;
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string detail;  // first failing case, for diagnostics
    bool ok() const { return cases > 0 && failures == 0; }
};

std::vector<PropertyResult> diffring_properties(uint64_t seed);
std::vector<PropertyResult> varcalc_properties(uint64_t seed);
std::vector<PropertyResult> psdop_properties(uint64_t seed);
std::vector<PropertyResult> knov_properties(uint64_t seed);
std::vector<PropertyResult> parser_properties(uint64_t seed);

// In-process suites for all modules (everything except the subprocess
// contract checks below).
std::vector<PropertyResult> all_property_suites(uint64_t seed);

// Exit-status and report-determinism contract of the command-line tool,
// exercised through real subprocesses.
std::vector<PropertyResult> cli_contract_properties(const std::string& knv_bin,
                                                    const std::string& fixture_path,
                                                    const std::string& tmpdir);

}  // namespace knvtest
