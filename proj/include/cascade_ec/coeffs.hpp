#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cascade_ec/gf.hpp"
#include "cascade_ec/matrix.hpp"

namespace cascade_ec {

struct DistinctnessViolated : std::invalid_argument {
    DistinctnessViolated() : std::invalid_argument("Cauchy points must be pairwise distinct") {}
};

// Coefficients expressing the last global parity as a combination of the k
// data blocks and the first r-1 global parities:
//   G_r = sum_i gamma[i] * D_i + sum_j eta[j] * G_j.
// bar_gamma/bar_eta are the unnormalized versions satisfying
//   bar_gamma[i] + sum_j bar_eta[j] * alpha[i][j] == 0 for every i.
struct CombinationCoeffs {
    std::vector<uint16_t> gamma;      // k entries
    std::vector<uint16_t> eta;        // r-1 entries
    std::vector<uint16_t> bar_gamma;  // k entries
    std::vector<uint16_t> bar_eta;    // r entries
};

// Default evaluation points: a_i = i-1 (i = 1..k), b_j = k+j-1 (j = 1..r).
std::vector<uint16_t> default_points_a(int k);
std::vector<uint16_t> default_points_b(int k, int r);

// k x r matrix with alpha[i][j] = (b_j - a_i)^{-1}; all entries nonzero.
Matrix cauchy_alpha(const Field& f, const std::vector<uint16_t>& a,
                    const std::vector<uint16_t>& b);

// Requires r >= 2 and pairwise-distinct points.
CombinationCoeffs combination_coefficients(const Field& f, const std::vector<uint16_t>& a,
                                           const std::vector<uint16_t>& b);

struct StripeLayout;  // layout.hpp

struct NotApplicable : std::invalid_argument {
    NotApplicable() : std::invalid_argument("layout has no cascaded parity group") {}
};

// True iff the field-sum of the local parity generator rows equals the G_r row.
bool verify_cascade(const StripeLayout& layout);

}  // namespace cascade_ec
