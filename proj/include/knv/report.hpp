#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace knv {

// How zero tests are decided. Exact mode canonicalizes; probabilistic mode
// evaluates at `trials` random points mod 2^61 - 1 with a fixed seed, so a
// full run is reproducible.
struct RunMode {
    bool probabilistic = false;
    int trials = 40;
    uint64_t seed = 0x6b6e7631;  // "knv1"

    std::string name() const {
        return probabilistic ? "probabilistic(" + std::to_string(trials) + ")" : "exact";
    }
};

// One verification outcome. Serialized reports carry exactly the fields
// below; residual_summary is omitted when empty.
struct Report {
    std::string check;
    std::vector<std::string> inputs;
    std::string verdict;  // pass | fail | error
    std::string mode;
    std::string residual_summary;
    int64_t time_ms = 0;
    std::string fixture_checksum;

    bool passed() const { return verdict == "pass"; }
};

// JSON array of report records (nlohmann serialization, field names fixed).
std::string reports_to_json(const std::vector<Report>& reports);

// FNV-1a (64-bit) of a byte string, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace knv
