#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace knv {

// Packed variable identifier. Parameters sort before jet variables; jets
// sort by (dependent-variable index, derivative order).
struct VarId {
    uint32_t raw = 0;

    static constexpr uint32_t kJetFlag = 0x80000000u;

    static constexpr VarId param(unsigned idx) { return VarId{idx}; }
    static constexpr VarId jet(unsigned dep, unsigned order) {
        return VarId{kJetFlag | (dep << 20) | order};
    }

    constexpr bool is_jet() const { return raw & kJetFlag; }
    constexpr bool is_param() const { return !is_jet(); }
    constexpr unsigned dep() const { return (raw >> 20) & 0x7ffu; }
    constexpr unsigned order() const { return raw & 0xfffffu; }
    constexpr unsigned param_index() const { return raw; }

    // The jet one derivative order up; identity on parameters is not defined.
    constexpr VarId successor() const { return VarId{raw + 1}; }

    auto operator<=>(const VarId&) const = default;

    std::string name() const;
};

// Parameter slots of the constants field Q(p0..p4, alpha, beta, gamma).
inline constexpr VarId kParamP[5] = {VarId::param(0), VarId::param(1), VarId::param(2),
                                     VarId::param(3), VarId::param(4)};
inline constexpr VarId kParamAlpha = VarId::param(5);
inline constexpr VarId kParamBeta = VarId::param(6);
inline constexpr VarId kParamGamma = VarId::param(7);
inline constexpr unsigned kNumParams = 8;

inline std::string VarId::name() const {
    if (is_param()) {
        switch (param_index()) {
            case 5: return "alpha";
            case 6: return "beta";
            case 7: return "gamma";
            default: return "p" + std::to_string(param_index());
        }
    }
    std::string s;
    if (dep() == 0) {
        s = "u";
        if (order() > 0) s += std::to_string(order());
    } else {
        s = "w" + std::to_string(dep()) + "_" + std::to_string(order());
    }
    return s;
}

}  // namespace knv
