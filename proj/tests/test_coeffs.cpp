#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade_ec/coeffs.hpp"
#include "cascade_ec/layout.hpp"
#include "cascade_ec/presets.hpp"

using namespace cascade_ec;

TEST_CASE("cauchy matrix entries") {
    const Field& f = Field::get(8);
    Matrix m = cauchy_alpha(f, {0}, {1});
    CHECK(m.at(0, 0) == 1);  // (1-0)^{-1}

    auto a = default_points_a(6);
    auto b = default_points_b(6, 2);
    Matrix alpha = cauchy_alpha(f, a, b);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(alpha.at(i, j) != 0);
            CHECK(alpha.at(i, j) == f.inv(Field::sub(b[j], a[i])));
        }
    CHECK_THROWS_AS(cauchy_alpha(f, {1, 2}, {2, 5}), DistinctnessViolated);
}

TEST_CASE("cauchy submatrices are invertible (MDS property)") {
    const Field& f = Field::get(8);
    auto a = default_points_a(8);
    auto b = default_points_b(8, 3);
    Matrix alpha = cauchy_alpha(f, a, b);
    // every square submatrix of a Cauchy matrix is invertible; spot-check 2x2
    for (int i1 = 0; i1 < 8; ++i1)
        for (int i2 = i1 + 1; i2 < 8; ++i2)
            for (int j1 = 0; j1 < 3; ++j1)
                for (int j2 = j1 + 1; j2 < 3; ++j2) {
                    uint16_t det = Field::sub(
                        f.mul(alpha.at(i1, j1), alpha.at(i2, j2)),
                        f.mul(alpha.at(i1, j2), alpha.at(i2, j1)));
                    REQUIRE(det != 0);
                }
}

TEST_CASE("theorem identity holds for all preset point sets") {
    const Field& f = Field::get(8);
    for (const ParamPreset& pp : kPresets) {
        auto a = default_points_a(pp.k);
        auto b = default_points_b(pp.k, pp.r);
        Matrix alpha = cauchy_alpha(f, a, b);
        CombinationCoeffs c = combination_coefficients(f, a, b);
        for (int i = 0; i < pp.k; ++i) {
            uint16_t acc = c.bar_gamma[i];
            for (int j = 0; j < pp.r; ++j)
                acc = Field::add(acc, f.mul(c.bar_eta[j], alpha.at(i, j)));
            REQUIRE(acc == 0);
        }
        for (uint16_t g : c.gamma) REQUIRE(g != 0);
        for (uint16_t e : c.eta) REQUIRE(e != 0);
    }
}

TEST_CASE("theorem identity across the (k,r) sweep") {
    const Field& f = Field::get(8);
    for (int k = 4; k <= 96; k += 4) {
        for (int r = 2; r <= 5; ++r) {
            if (k + r > 256) continue;
            auto a = default_points_a(k);
            auto b = default_points_b(k, r);
            Matrix alpha = cauchy_alpha(f, a, b);
            CombinationCoeffs c = combination_coefficients(f, a, b);
            for (int i = 0; i < k; ++i) {
                uint16_t acc = c.bar_gamma[i];
                for (int j = 0; j < r; ++j)
                    acc = Field::add(acc, f.mul(c.bar_eta[j], alpha.at(i, j)));
                REQUIRE(acc == 0);
            }
        }
    }
}

TEST_CASE("r=2 normalizes eta_1 to one") {
    const Field& f = Field::get(8);
    for (int k : {6, 12, 24}) {
        CombinationCoeffs c =
            combination_coefficients(f, default_points_a(k), default_points_b(k, 2));
        CHECK(c.eta.size() == 1);
        CHECK(c.eta[0] == 1);
    }
}

TEST_CASE("r < 2 rejected") {
    const Field& f = Field::get(8);
    CHECK_THROWS_AS(combination_coefficients(f, {0, 1}, {2}), std::invalid_argument);
}

TEST_CASE("cascade row identity on CP layouts") {
    for (const ParamPreset& pp : kPresets) {
        CHECK(verify_cascade(build_layout({Scheme::CPAzure, pp.k, pp.r, pp.p, 8})));
        CHECK(verify_cascade(build_layout({Scheme::CPUniform, pp.k, pp.r, pp.p, 8})));
    }
    CHECK_THROWS_AS(verify_cascade(build_layout({Scheme::Azure, 6, 2, 2, 8})),
                    NotApplicable);
}
