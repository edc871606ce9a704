#include "knv/report.hpp"

#include <json.hpp>

namespace knv {

std::string reports_to_json(const std::vector<Report>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j;
        j["check"] = r.check;
        j["inputs"] = r.inputs;
        j["verdict"] = r.verdict;
        j["mode"] = r.mode;
        if (!r.residual_summary.empty()) j["residual_summary"] = r.residual_summary;
        j["time_ms"] = r.time_ms;
        j["fixture_checksum"] = r.fixture_checksum;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[size_t(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace knv
