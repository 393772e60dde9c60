#include "cascade_ec/planner.hpp"

#include <algorithm>

namespace cascade_ec {

const char* repair_mode_name(RepairMode m) {
    switch (m) {
        case RepairMode::Local: return "local";
        case RepairMode::Global: return "global";
        case RepairMode::Mixed: return "mixed";
    }
    return "?";
}

std::vector<std::vector<int>> repair_routes(const StripeLayout& lay, int block) {
    const int k = lay.k(), r = lay.r(), p = lay.p();
    const bool optimal = lay.spec.scheme == Scheme::OptimalCauchy;
    if (lay.cascade_group != kNoGroup) {
        int gr = lay.global_index(r - 1);
        if (block == gr) {
            std::vector<int> locs;
            for (int m = 0; m < p; ++m) locs.push_back(lay.local_index(m));
            return {locs};
        }
        if (lay.is_local(block)) {
            std::vector<int> casc;
            for (int m = 0; m < p; ++m)
                if (lay.local_index(m) != block) casc.push_back(lay.local_index(m));
            casc.push_back(gr);
            int gi = block - lay.local_index(0);
            return {casc, lay.groups[gi].members};
        }
    }
    if (lay.is_local(block)) {
        int gi = block - lay.local_index(0);
        std::vector<int> mem = lay.groups[gi].members;
        if (optimal)
            for (int j = 0; j < r; ++j) mem.push_back(lay.global_index(j));
        return {mem};
    }
    int gi = lay.member_group(block);
    if (gi != kNoGroup && gi != lay.cascade_group) {
        std::vector<int> src;
        for (int s : lay.groups[gi].members)
            if (s != block) src.push_back(s);
        src.push_back(lay.groups[gi].parity);
        if (optimal)
            for (int j = 0; j < r; ++j)
                if (lay.global_index(j) != block) src.push_back(lay.global_index(j));
        return {src};
    }
    if (optimal && lay.is_global(block)) {
        std::vector<std::vector<int>> out;
        for (const Group& g : lay.groups) {
            std::vector<int> src = g.members;
            src.push_back(g.parity);
            for (int j = 0; j < r; ++j)
                if (lay.global_index(j) != block) src.push_back(lay.global_index(j));
            out.push_back(std::move(src));
        }
        return out;
    }
    (void)k;
    return {};
}

namespace {

// Optimal local parities must not chain off repaired blocks; everything else may.
bool allow_chain(const StripeLayout& lay, int block) {
    return !(lay.spec.scheme == Scheme::OptimalCauchy && lay.is_local(block));
}

struct ReadSet {
    std::vector<char> in;
    std::vector<int> order;
    explicit ReadSet(int n) : in(n, 0) {}
    void add(int b) {
        if (!in[b]) {
            in[b] = 1;
            order.push_back(b);
        }
    }
    int size() const { return static_cast<int>(order.size()); }
};

struct GlobalModel {
    ReadSet reads;
    bool all_data_known = false;
    std::vector<int> decode_set;  // reads backing the data decode, in read order
    std::vector<int> failed_data, failed_globals, failed_locals;
};

int restricted_rank(const StripeLayout& lay, const std::vector<int>& parity_rows,
                    const std::vector<int>& failed_data) {
    Matrix m(static_cast<int>(parity_rows.size()),
             static_cast<int>(failed_data.size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = lay.generator.at(parity_rows[i], failed_data[j]);
    return mat_rank(lay.field(), std::move(m));
}

GlobalModel global_model(const StripeLayout& lay, const std::vector<int>& failed) {
    const int k = lay.k(), r = lay.r(), p = lay.p();
    std::vector<char> is_failed(lay.n(), 0);
    for (int b : failed) is_failed[b] = 1;

    GlobalModel gm{ReadSet(lay.n())};
    for (int b = 0; b < lay.n(); ++b) {
        if (!is_failed[b]) continue;
        if (lay.is_data(b)) gm.failed_data.push_back(b);
        else if (lay.is_global(b)) gm.failed_globals.push_back(b);
        else gm.failed_locals.push_back(b);
    }

    if (!gm.failed_data.empty()) {
        for (int d = 0; d < k; ++d)
            if (!is_failed[d]) gm.reads.add(d);
        for (int j = 0; j < r && gm.reads.size() < k; ++j)
            if (!is_failed[lay.global_index(j)]) gm.reads.add(lay.global_index(j));
        for (int m = 0; m < p && gm.reads.size() < k; ++m)
            if (!is_failed[lay.local_index(m)]) gm.reads.add(lay.local_index(m));
        int alive_globals = 0;
        for (int j = 0; j < r; ++j)
            if (!is_failed[lay.global_index(j)]) ++alive_globals;
        if (alive_globals < static_cast<int>(gm.failed_data.size())) {
            // surviving globals alone cannot span the lost data: extend the
            // read set with further parities until the restricted rank closes
            std::vector<int> parities;
            for (int b : gm.reads.order)
                if (!lay.is_data(b)) parities.push_back(b);
            int need = static_cast<int>(gm.failed_data.size());
            int rank = restricted_rank(lay, parities, gm.failed_data);
            for (int b = k; b < lay.n() && rank < need; ++b) {
                if (is_failed[b] || gm.reads.in[b]) continue;
                parities.push_back(b);
                int nr = restricted_rank(lay, parities, gm.failed_data);
                if (nr > rank) {
                    rank = nr;
                    gm.reads.add(b);
                } else {
                    parities.pop_back();
                }
            }
        }
        gm.decode_set = gm.reads.order;
        gm.all_data_known = true;
    } else if (!failed.empty()) {
        for (int d = 0; d < k; ++d) gm.reads.add(d);  // recompute parities
        gm.all_data_known = true;
    }

    const bool optimal = lay.spec.scheme == Scheme::OptimalCauchy;
    for (int b : gm.failed_locals) {
        int gi = b - lay.local_index(0);
        for (int s : lay.groups[gi].members) {
            if (is_failed[s]) continue;  // reconstructed
            if (lay.is_data(s)) {
                if (!gm.all_data_known) gm.reads.add(s);
            } else {
                gm.reads.add(s);
            }
        }
        if (optimal && !gm.failed_data.empty()) {
            for (int j = 0; j < r; ++j)
                if (!is_failed[lay.global_index(j)]) gm.reads.add(lay.global_index(j));
        }
    }
    return gm;
}

std::vector<int> all_data(const StripeLayout& lay) {
    std::vector<int> d(lay.k());
    for (int i = 0; i < lay.k(); ++i) d[i] = i;
    return d;
}

std::vector<int> sorted_reads(const ReadSet& rs) {
    std::vector<int> out = rs.order;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

LocalAttempt plan_local(const StripeLayout& lay, const std::vector<int>& failed) {
    std::vector<char> pending(lay.n(), 0), repaired(lay.n(), 0);
    ReadSet reads(lay.n());
    int npending = 0;
    for (int b : failed) {
        if (!pending[b]) ++npending;
        pending[b] = 1;
    }
    LocalAttempt out;
    while (npending > 0) {
        int best_block = -1;
        std::vector<int> best_route;
        int best_new = 0, best_len = 0;
        for (int b = 0; b < lay.n(); ++b) {
            if (!pending[b]) continue;
            for (const auto& rt : repair_routes(lay, b)) {
                bool ok = true;
                int newreads = 0;
                for (int s : rt) {
                    if (pending[s] || (repaired[s] && !allow_chain(lay, b))) {
                        ok = false;
                        break;
                    }
                    if (!repaired[s] && !reads.in[s]) ++newreads;
                }
                if (!ok) continue;
                int len = static_cast<int>(rt.size());
                bool better = best_block < 0;
                if (!better) {
                    if (newreads != best_new) better = newreads < best_new;
                    else if (len != best_len) better = len < best_len;
                    else if (b != best_block) better = b < best_block;
                    else better = rt < best_route;
                }
                if (better) {
                    best_block = b;
                    best_route = rt;
                    best_new = newreads;
                    best_len = len;
                }
            }
        }
        if (best_block < 0) return {};
        for (int s : best_route)
            if (!repaired[s]) reads.add(s);
        out.transfers += best_len;
        out.plan.steps.push_back({best_block, best_route, {}});
        repaired[best_block] = 1;
        pending[best_block] = 0;
        --npending;
    }
    out.feasible = true;
    out.plan.accessed = sorted_reads(reads);
    out.plan.mode = RepairMode::Local;
    return out;
}

int global_cost(const StripeLayout& lay, const std::vector<int>& failed) {
    return global_model(lay, failed).reads.size();
}

RepairPlan plan_global(const StripeLayout& lay, const std::vector<int>& failed) {
    GlobalModel gm = global_model(lay, failed);
    const int r = lay.r();
    const bool optimal = lay.spec.scheme == Scheme::OptimalCauchy;

    RepairPlan plan;
    for (int d : gm.failed_data) plan.steps.push_back({d, gm.decode_set, {}});
    if (optimal && !gm.failed_locals.empty() && gm.failed_data.empty()) {
        // recompute alive globals from the full data read instead of reading them
        std::vector<char> is_failed(lay.n(), 0);
        for (int b : failed) is_failed[b] = 1;
        for (int j = 0; j < r; ++j)
            if (!is_failed[lay.global_index(j)])
                plan.steps.push_back({lay.global_index(j), all_data(lay), {}});
    }
    for (int g : gm.failed_globals) plan.steps.push_back({g, all_data(lay), {}});
    for (int b : gm.failed_locals) {
        int gi = b - lay.local_index(0);
        std::vector<int> src;
        if (!optimal && gm.failed_data.empty()) {
            // the model reads every data block here; source the step from them
            // plus the group's parity-type members so reads match the steps
            src = all_data(lay);
            for (int s : lay.groups[gi].members)
                if (!lay.is_data(s)) src.push_back(s);
        } else {
            src = lay.groups[gi].members;
            if (optimal)
                for (int j = 0; j < r; ++j) src.push_back(lay.global_index(j));
        }
        plan.steps.push_back({b, std::move(src), {}});
    }
    plan.accessed = sorted_reads(gm.reads);
    plan.mode = (!gm.failed_data.empty() && !gm.failed_locals.empty())
                    ? RepairMode::Mixed
                    : RepairMode::Global;
    return plan;
}

RepairPlan plan_single(const StripeLayout& lay, int block) {
    auto routes = repair_routes(lay, block);
    if (routes.empty()) return plan_global(lay, {block});
    size_t pick = 0;
    if (!(lay.cascade_group != kNoGroup && lay.is_local(block))) {
        for (size_t i = 1; i < routes.size(); ++i)
            if (routes[i].size() < routes[pick].size()) pick = i;
    }  // cascaded local parities always follow the cascade route
    RepairPlan plan;
    plan.steps.push_back({block, routes[pick], {}});
    plan.accessed = routes[pick];
    std::sort(plan.accessed.begin(), plan.accessed.end());
    plan.mode = RepairMode::Local;
    return plan;
}

RepairPlan plan_multi(const StripeLayout& lay, const std::vector<int>& failed) {
    if (failed.empty()) return {};
    LocalAttempt la = plan_local(lay, failed);
    if (la.feasible && la.plan.cost() <= lay.k()) return la.plan;
    if (!decodable(lay, failed)) throw Undecodable();
    return plan_global(lay, failed);
}

bool decodable(const StripeLayout& lay, const std::vector<int>& failed) {
    std::vector<char> is_failed(lay.n(), 0);
    for (int b : failed) is_failed[b] = 1;
    std::vector<int> failed_data;
    for (int d = 0; d < lay.k(); ++d)
        if (is_failed[d]) failed_data.push_back(d);
    if (failed_data.empty()) return true;
    // surviving data rows are unit vectors off the failed columns, so
    // decodability reduces to the surviving parity rows spanning them
    std::vector<int> parities;
    for (int b = lay.k(); b < lay.n(); ++b)
        if (!is_failed[b]) parities.push_back(b);
    return restricted_rank(lay, parities, failed_data) ==
           static_cast<int>(failed_data.size());
}

void resolve_coefficients(const StripeLayout& lay, RepairPlan& plan) {
    const Field& f = lay.field();
    for (RepairStep& step : plan.steps) {
        if (!step.coeffs.empty()) continue;
        Matrix rows(static_cast<int>(step.sources.size()), lay.k());
        for (size_t i = 0; i < step.sources.size(); ++i)
            for (int c = 0; c < lay.k(); ++c)
                rows.at(static_cast<int>(i), c) = lay.generator.at(step.sources[i], c);
        std::vector<uint16_t> target(lay.generator.row(step.target),
                                     lay.generator.row(step.target) + lay.k());
        try {
            step.coeffs = solve_combination(f, rows, target);
        } catch (const NotInvertible&) {
            throw Undecodable();
        }
    }
}

PairDecision pair_decision(const StripeLayout& lay, int a, int b) {
    std::vector<int> F{a, b};
    PairDecision d;
    d.global_cost = global_cost(lay, F);
    LocalAttempt la = plan_local(lay, F);
    d.local_feasible = la.feasible;
    d.local_cost = la.feasible ? la.plan.cost() : -1;
    if (la.feasible && d.local_cost <= lay.k()) {
        d.mode = RepairMode::Local;
        d.cost = d.local_cost;
    } else {
        d.mode = RepairMode::Global;
        d.cost = d.global_cost;
    }
    return d;
}

}  // namespace cascade_ec
