#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade_ec/metrics.hpp"
#include "cascade_ec/presets.hpp"

using namespace cascade_ec;

namespace {

struct GridRow {
    Scheme scheme;
    int preset;  // 0-based
    long long adrc, arc1, arc2, local, effective;  // exact numerators
};

// Exact enumeration results for every scheme x preset. Denominators are
// k (adrc), n (arc1) and C(n,2) (the rest).
const GridRow kGrid[] = {
    {Scheme::Azure, 0, 18, 36, 270, 16, 0},
    {Scheme::Azure, 1, 72, 108, 1440, 49, 0},
    {Scheme::Azure, 2, 128, 192, 3360, 81, 0},
    {Scheme::Azure, 3, 80, 160, 4560, 250, 250},
    {Scheme::Azure, 4, 288, 360, 9072, 169, 0},
    {Scheme::Azure, 5, 768, 1008, 57408, 867, 867},
    {Scheme::Azure, 6, 1296, 1656, 149544, 2166, 2166},
    {Scheme::Azure, 7, 2304, 2880, 344160, 3750, 3750},
    {Scheme::AzurePlus1, 0, 36, 48, 280, 21, 0},
    {Scheme::AzurePlus1, 1, 144, 162, 1456, 39, 0},
    {Scheme::AzurePlus1, 2, 256, 284, 3401, 68, 0},
    {Scheme::AzurePlus1, 3, 100, 132, 4254, 312, 312},
    {Scheme::AzurePlus1, 4, 576, 606, 9100, 75, 0},
    {Scheme::AzurePlus1, 5, 1152, 1220, 66292, 875, 250},
    {Scheme::AzurePlus1, 6, 1728, 1820, 166032, 2250, 2250},
    {Scheme::AzurePlus1, 7, 3072, 3198, 384590, 3861, 3861},
    {Scheme::OptimalCauchy, 0, 30, 50, 282, 28, 0},
    {Scheme::OptimalCauchy, 1, 96, 128, 1464, 73, 0},
    {Scheme::OptimalCauchy, 2, 176, 231, 3424, 129, 0},
    {Scheme::OptimalCauchy, 3, 140, 196, 4810, 310, 310},
    {Scheme::OptimalCauchy, 4, 336, 392, 9120, 217, 0},
    {Scheme::OptimalCauchy, 5, 960, 1100, 58716, 1059, 1059},
    {Scheme::OptimalCauchy, 6, 1584, 1760, 149208, 2454, 2454},
    {Scheme::OptimalCauchy, 7, 2784, 3045, 342654, 4230, 4230},
    {Scheme::UniformCauchy, 0, 24, 40, 280, 25, 0},
    {Scheme::UniformCauchy, 1, 84, 112, 1456, 64, 0},
    {Scheme::UniformCauchy, 2, 151, 200, 3401, 110, 0},
    {Scheme::UniformCauchy, 3, 92, 130, 4210, 313, 313},
    {Scheme::UniformCauchy, 4, 312, 364, 9100, 196, 0},
    {Scheme::UniformCauchy, 5, 830, 954, 57906, 1008, 1008},
    {Scheme::UniformCauchy, 6, 1368, 1520, 145977, 2400, 2400},
    {Scheme::UniformCauchy, 7, 2421, 2652, 336206, 4134, 4134},
    {Scheme::CPAzure, 0, 18, 30, 228, 30, 21},
    {Scheme::CPAzure, 1, 72, 90, 1245, 75, 39},
    {Scheme::CPAzure, 2, 128, 166, 3003, 115, 51},
    {Scheme::CPAzure, 3, 80, 150, 4020, 295, 295},
    {Scheme::CPAzure, 4, 288, 318, 8247, 219, 75},
    {Scheme::CPAzure, 5, 768, 924, 53052, 966, 966},
    {Scheme::CPAzure, 6, 1296, 1532, 138666, 2314, 2314},
    {Scheme::CPAzure, 7, 2304, 2708, 324462, 3946, 3946},
    {Scheme::CPUniform, 0, 21, 31, 235, 36, 24},
    {Scheme::CPUniform, 1, 78, 91, 1252, 84, 42},
    {Scheme::CPUniform, 2, 144, 168, 3018, 138, 57},
    {Scheme::CPUniform, 3, 88, 128, 3713, 340, 340},
    {Scheme::CPUniform, 4, 300, 319, 8254, 234, 78},
    {Scheme::CPUniform, 5, 816, 879, 53052, 1077, 1077},
    {Scheme::CPUniform, 6, 1350, 1427, 135444, 2494, 2494},
    {Scheme::CPUniform, 7, 2400, 2520, 316980, 4260, 4260},
};

}  // namespace

TEST_CASE("exact metric numerators across all schemes and presets") {
    for (const GridRow& row : kGrid) {
        const ParamPreset& pp = kPresets[row.preset];
        CAPTURE(scheme_name(row.scheme));
        CAPTURE(pp.label);
        StripeLayout lay =
            build_layout({row.scheme, pp.k, pp.r, pp.p, 8});
        MetricReport rep = compute_metrics(lay);
        CHECK(rep.adrc_num == row.adrc);
        CHECK(rep.arc1_num == row.arc1);
        CHECK(rep.arc2_num == row.arc2);
        CHECK(rep.local_num == row.local);
        CHECK(rep.effective_num == row.effective);
        CHECK(rep.adrc_den == pp.k);
        CHECK(rep.arc1_den == pp.k + pp.r + pp.p);
    }
}

TEST_CASE("base-mds metrics collapse to k") {
    StripeLayout lay = build_layout({Scheme::BaseMDS, 6, 2, 0, 8});
    MetricReport rep = compute_metrics(lay);
    CHECK(rep.adrc == doctest::Approx(6.0));
    CHECK(rep.arc1 == doctest::Approx(6.0));
    CHECK(rep.local_repair_portion == doctest::Approx(0.0));
}

TEST_CASE("published single-failure averages at P1") {
    StripeLayout azure = build_layout({Scheme::Azure, 6, 2, 2, 8});
    CHECK(compute_metrics(azure).adrc == doctest::Approx(3.0).epsilon(0.001));
    StripeLayout cpu = build_layout({Scheme::CPUniform, 6, 2, 2, 8});
    MetricReport rep = compute_metrics(cpu);
    CHECK(rep.adrc == doctest::Approx(3.5).epsilon(0.001));
    CHECK(rep.local_repair_portion == doctest::Approx(0.80).epsilon(0.01));
}
