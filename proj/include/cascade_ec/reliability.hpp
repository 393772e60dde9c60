#pragma once

#include <cstdint>
#include <vector>

#include "cascade_ec/metrics.hpp"
#include "cascade_ec/planner.hpp"

namespace cascade_ec {

// p[f] (f = 1..r+p+1) is the fraction of f-subsets of the n blocks that are
// NOT decodable. Exhaustive when C(n,f) <= exhaustive_limit, otherwise
// `samples` uniform draws from the recorded seed.
struct SurvivalProfile {
    std::vector<double> p;          // index 0 unused, p[f] for f >= 1
    std::vector<char> sampled;      // per entry: 1 if estimated by sampling
    uint64_t seed = 0;
};

SurvivalProfile survival_profile(const StripeLayout& lay, uint64_t seed = 1,
                                 long long exhaustive_limit = 1000000,
                                 int samples = 100000, bool force_sample = false);

struct ReliabilityParams {
    double lambda_per_node = 0.25;  // failures per node-year
    std::vector<double> mu;         // repairs/year, mu[f] for state f >= 1
    int horizon_states = 0;         // non-absorbing states beyond healthy; 0 = r+p
};

// mu[f] = 1 / (detectionDelay + avgcost_f * blockSize / bandwidth), converted
// to repairs per year. avgcost_1 is arc1; deeper states average the
// plan_multi read cost over decodable f-subsets (sampled when too many).
std::vector<double> derive_mu(const StripeLayout& lay, double bandwidth_bytes_s,
                              double block_bytes, double detection_delay_s,
                              int states, uint64_t seed = 1);

struct MttdlResult {
    double years = 0;
    std::vector<double> p;   // failure-probability branch per state
    std::vector<double> mu;  // repair rates used
};

// Expected absorption time of the birth-death chain of failure states:
// from state f, failures arrive at (n-f)*lambda and branch to data loss with
// probability p[f+1]; repairs return to f-1 at rate mu[f].
MttdlResult mttdl(const StripeLayout& lay, const ReliabilityParams& params,
                  const SurvivalProfile& profile);

}  // namespace cascade_ec
