#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cascade_ec/planner.hpp"

namespace cascade_ec {

using BlockBuffer = std::vector<uint8_t>;

struct LengthMismatch : std::invalid_argument {
    LengthMismatch() : std::invalid_argument("block buffers must share one length") {}
};

struct PlanSourceUnavailable : std::runtime_error {
    explicit PlanSourceUnavailable(int block)
        : std::runtime_error("plan source block " + std::to_string(block) +
                             " is unavailable") {}
};

// Produce the full stripe: data buffers followed by the r+p parity buffers.
std::vector<BlockBuffer> encode(const StripeLayout& lay,
                                const std::vector<BlockBuffer>& data);

// Execute the plan's steps in order against a stripe with erasures. Resolves
// coefficients if the plan is unresolved. Sources are read from `blocks`
// unless an earlier step produced them; every read is appended to reads_out
// (sorted, deduplicated). Returns the produced buffers indexed by block.
std::vector<std::optional<BlockBuffer>> reconstruct(
    const StripeLayout& lay, RepairPlan& plan,
    const std::vector<std::optional<BlockBuffer>>& blocks,
    std::vector<int>* reads_out = nullptr);

// Recover the k data buffers from any k available blocks of rank k.
std::vector<BlockBuffer> decode_full(
    const StripeLayout& lay, const std::vector<std::optional<BlockBuffer>>& blocks);

// dst += coeff * src over GF(2^w); buffers must share length (even for w=16).
void accumulate(const Field& f, uint16_t coeff, const uint8_t* src, uint8_t* dst,
                size_t len);

}  // namespace cascade_ec
