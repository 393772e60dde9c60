#include "cascade_ec/metrics.hpp"

namespace cascade_ec {

MetricReport compute_metrics(const StripeLayout& lay) {
    const int n = lay.n(), k = lay.k();
    MetricReport rep;
    rep.adrc_den = k;
    rep.arc1_den = n;
    rep.pair_den = static_cast<long long>(n) * (n - 1) / 2;

    for (int b = 0; b < n; ++b) {
        int cost = plan_single(lay, b).cost();
        rep.arc1_num += cost;
        if (lay.is_data(b)) rep.adrc_num += cost;
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            PairDecision d = pair_decision(lay, a, b);
            rep.arc2_num += d.cost;
            if (d.local_feasible) {
                ++rep.local_num;
                if (d.local_cost < d.global_cost) ++rep.effective_num;
            }
        }
    }
    rep.adrc = static_cast<double>(rep.adrc_num) / rep.adrc_den;
    rep.arc1 = static_cast<double>(rep.arc1_num) / rep.arc1_den;
    rep.arc2 = static_cast<double>(rep.arc2_num) / rep.pair_den;
    rep.local_repair_portion = static_cast<double>(rep.local_num) / rep.pair_den;
    rep.effective_local_portion =
        static_cast<double>(rep.effective_num) / rep.pair_den;
    return rep;
}

}  // namespace cascade_ec
