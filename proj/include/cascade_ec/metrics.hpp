#pragma once

#include <cstdint>

#include "cascade_ec/planner.hpp"

namespace cascade_ec {

// Repair-cost metrics by exhaustive enumeration of single and pair failures.
// Numerators are exact block counts; the *_den fields give the divisor.
struct MetricReport {
    long long adrc_num = 0;  // sum of single-repair costs over data blocks
    long long arc1_num = 0;  // sum of single-repair costs over all blocks
    long long arc2_num = 0;  // sum of chosen pair-repair costs
    long long local_num = 0;      // pairs locally repairable
    long long effective_num = 0;  // pairs where local repair beats a decode
    int adrc_den = 0;        // k
    int arc1_den = 0;        // n
    long long pair_den = 0;  // C(n, 2)

    double adrc = 0, arc1 = 0, arc2 = 0;
    double local_repair_portion = 0, effective_local_portion = 0;
};

MetricReport compute_metrics(const StripeLayout& lay);

}  // namespace cascade_ec
