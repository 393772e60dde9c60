#pragma once

#include <array>
#include <optional>
#include <string>

namespace cascade_ec {

struct ParamPreset {
    const char* label;
    int k, r, p;
};

inline constexpr std::array<ParamPreset, 8> kPresets{{
    {"P1", 6, 2, 2},
    {"P2", 12, 2, 2},
    {"P3", 16, 3, 2},
    {"P4", 20, 3, 5},
    {"P5", 24, 2, 2},
    {"P6", 48, 4, 3},
    {"P7", 72, 4, 4},
    {"P8", 96, 5, 4},
}};

inline std::optional<ParamPreset> preset_by_label(const std::string& label) {
    for (const ParamPreset& p : kPresets)
        if (label == p.label) return p;
    return std::nullopt;
}

}  // namespace cascade_ec
