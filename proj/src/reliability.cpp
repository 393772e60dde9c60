#include "cascade_ec/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cascade_ec {

namespace {

constexpr double kSecondsPerYear = 365.25 * 24 * 3600;

long long choose(int n, int f) {
    long long c = 1;
    for (int i = 1; i <= f; ++i) {
        c = c * (n - f + i) / i;
        if (c > (1LL << 60)) return 1LL << 60;
    }
    return c;
}

// Visit every f-subset of {0..n-1}; stop early if fn returns false.
template <typename Fn>
void for_each_subset(int n, int f, Fn&& fn) {
    std::vector<int> idx(f);
    for (int i = 0; i < f; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return;
        int i = f - 1;
        while (i >= 0 && idx[i] == n - f + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < f; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<int> random_subset(int n, int f, std::mt19937_64& rng) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < f; ++i) {
        std::uniform_int_distribution<int> d(i, n - 1);
        std::swap(pool[i], pool[d(rng)]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + f);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SurvivalProfile survival_profile(const StripeLayout& lay, uint64_t seed,
                                 long long exhaustive_limit, int samples,
                                 bool force_sample) {
    const int n = lay.n();
    const int fmax = std::min(n, lay.r() + lay.p() + 1);
    SurvivalProfile prof;
    prof.seed = seed;
    prof.p.assign(fmax + 1, 0.0);
    prof.sampled.assign(fmax + 1, 0);
    std::mt19937_64 rng(seed);
    for (int f = 1; f <= fmax; ++f) {
        long long total = choose(n, f);
        long long bad = 0;
        if (!force_sample && total <= exhaustive_limit) {
            for_each_subset(n, f, [&](const std::vector<int>& sub) {
                if (!decodable(lay, sub)) ++bad;
                return true;
            });
            prof.p[f] = static_cast<double>(bad) / total;
        } else {
            for (int s = 0; s < samples; ++s)
                if (!decodable(lay, random_subset(n, f, rng))) ++bad;
            prof.p[f] = static_cast<double>(bad) / samples;
            prof.sampled[f] = 1;
        }
    }
    return prof;
}

std::vector<double> derive_mu(const StripeLayout& lay, double bandwidth_bytes_s,
                              double block_bytes, double detection_delay_s,
                              int states, uint64_t seed) {
    const int n = lay.n();
    std::vector<double> mu(states + 1, 0.0);
    std::mt19937_64 rng(seed);
    for (int f = 1; f <= states; ++f) {
        double avg_cost;
        if (f == 1) {
            long long sum = 0;
            for (int b = 0; b < n; ++b) sum += plan_single(lay, b).cost();
            avg_cost = static_cast<double>(sum) / n;
        } else {
            long long total = choose(n, f);
            double sum = 0;
            long long cnt = 0;
            auto visit = [&](const std::vector<int>& sub) {
                try {
                    sum += plan_multi(lay, sub).cost();
                    ++cnt;
                } catch (const Undecodable&) {
                }
            };
            if (total <= 100000) {
                for_each_subset(n, f, [&](const std::vector<int>& sub) {
                    visit(sub);
                    return true;
                });
            } else {
                for (int s = 0; s < 10000; ++s) visit(random_subset(n, f, rng));
            }
            avg_cost = cnt ? sum / cnt : lay.k();
        }
        double repair_s = detection_delay_s + avg_cost * block_bytes / bandwidth_bytes_s;
        mu[f] = kSecondsPerYear / repair_s;
    }
    return mu;
}

MttdlResult mttdl(const StripeLayout& lay, const ReliabilityParams& params,
                  const SurvivalProfile& profile) {
    const int n = lay.n();
    const int F = params.horizon_states > 0 ? params.horizon_states
                                            : lay.r() + lay.p();
    auto pf = [&](int f) {
        if (f >= static_cast<int>(profile.p.size())) return 1.0;
        return profile.p[f];
    };
    auto muf = [&](int f) {
        if (f <= 0 || params.mu.empty()) return 0.0;
        if (f < static_cast<int>(params.mu.size())) return params.mu[f];
        return params.mu.back();
    };
    // (a_f + mu_f) T_f = 1 + mu_f T_{f-1} + a_f (1-p_{f+1}) T_{f+1}.
    // Forward-eliminate T_{f-1} so T_f = x_f + y_f T_{f+1}; every intermediate
    // stays positive, which keeps the huge-MTTDL regime stable.
    std::vector<double> x(F + 1), y(F + 1);
    for (int f = 0; f <= F; ++f) {
        double a = (n - f) * params.lambda_per_node;
        double m = muf(f);
        double denom = a + m - (f > 0 ? m * y[f - 1] : 0.0);
        if (denom <= 0) throw std::runtime_error("singular reliability chain");
        x[f] = (1.0 + (f > 0 ? m * x[f - 1] : 0.0)) / denom;
        y[f] = (f < F) ? a * (1.0 - pf(f + 1)) / denom : 0.0;
    }
    double t = x[F];
    for (int f = F - 1; f >= 0; --f) t = x[f] + y[f] * t;
    MttdlResult res;
    res.years = t;
    res.mu.assign(1, 0.0);
    for (int f = 1; f <= F; ++f) res.mu.push_back(muf(f));
    res.p.assign(1, 0.0);
    for (int f = 1; f <= F + 1; ++f) res.p.push_back(pf(f));
    return res;
}

}  // namespace cascade_ec
