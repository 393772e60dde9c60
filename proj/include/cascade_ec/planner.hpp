#pragma once

#include <stdexcept>
#include <vector>

#include "cascade_ec/layout.hpp"

namespace cascade_ec {

struct Undecodable : std::runtime_error {
    Undecodable() : std::runtime_error("failure pattern is not decodable") {}
};

enum class RepairMode { Local, Global, Mixed };
const char* repair_mode_name(RepairMode m);

// One reconstruction: target = sum_i coeffs[i] * sources[i]. Sources that are
// targets of earlier steps are taken from memory, everything else is read.
// coeffs stays empty until resolve_coefficients fills it in.
struct RepairStep {
    int target = -1;
    std::vector<int> sources;
    std::vector<uint16_t> coeffs;
};

struct RepairPlan {
    std::vector<RepairStep> steps;
    std::vector<int> accessed;  // sorted; sources read from disk
    RepairMode mode = RepairMode::Local;

    int cost() const { return static_cast<int>(accessed.size()); }
};

// Candidate local repair routes for a single failed block, in preference
// order. Empty for blocks that can only be repaired globally.
std::vector<std::vector<int>> repair_routes(const StripeLayout& lay, int block);

struct LocalAttempt {
    bool feasible = false;
    RepairPlan plan;
    int transfers = 0;  // sum of route lengths over all steps
};

// Iterative greedy local repair: at each round pick the (block, route) pair
// minimizing new reads. Infeasible when a pending block has no usable route.
LocalAttempt plan_local(const StripeLayout& lay, const std::vector<int>& failed);

// Decode-based repair: read surviving data plus parities up to k blocks,
// reconstruct failed data, then rebuild failed parities.
RepairPlan plan_global(const StripeLayout& lay, const std::vector<int>& failed);

// Single-block plan following each scheme's preferred route.
RepairPlan plan_single(const StripeLayout& lay, int block);

// Local plan when feasible and no wider than a full decode, global otherwise.
RepairPlan plan_multi(const StripeLayout& lay, const std::vector<int>& failed);

// Reads of plan_global without materializing the plan.
int global_cost(const StripeLayout& lay, const std::vector<int>& failed);

// True iff every failed block can be reconstructed from the survivors.
bool decodable(const StripeLayout& lay, const std::vector<int>& failed);

// Fill in the combination coefficients of every step.
void resolve_coefficients(const StripeLayout& lay, RepairPlan& plan);

struct PairDecision {
    RepairMode mode = RepairMode::Global;
    int cost = 0;
    bool local_feasible = false;
    int local_cost = -1;
    int global_cost = 0;
};

// Repair decision for a failed pair, as used by the repair-cost metrics.
PairDecision pair_decision(const StripeLayout& lay, int a, int b);

}  // namespace cascade_ec
