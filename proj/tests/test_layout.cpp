#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cascade_ec/layout.hpp"

using namespace cascade_ec;

namespace {

std::vector<std::string> labels(const StripeLayout& lay, const std::vector<int>& ids) {
    std::vector<std::string> out;
    for (int b : ids) out.push_back(lay.blocks[b].label);
    return out;
}

}  // namespace

TEST_CASE("scheme names roundtrip") {
    for (Scheme s : {Scheme::BaseMDS, Scheme::Azure, Scheme::AzurePlus1,
                     Scheme::OptimalCauchy, Scheme::UniformCauchy, Scheme::CPAzure,
                     Scheme::CPUniform}) {
        auto back = scheme_from_name(scheme_name(s));
        REQUIRE(back.has_value());
        CHECK(*back == s);
    }
    CHECK_FALSE(scheme_from_name("nope").has_value());
}

TEST_CASE("azure (6,2,2): two data groups, ungrouped globals") {
    StripeLayout lay = build_layout({Scheme::Azure, 6, 2, 2, 8});
    REQUIRE(lay.groups.size() == 2);
    CHECK(labels(lay, lay.groups[0].members) ==
          std::vector<std::string>{"D1", "D2", "D3"});
    CHECK(labels(lay, lay.groups[1].members) ==
          std::vector<std::string>{"D4", "D5", "D6"});
    CHECK(labels(lay, lay.ungrouped) == std::vector<std::string>{"G1", "G2"});
    CHECK(lay.cascade_group == kNoGroup);
    // locals are plain xor rows over their group
    for (int g = 0; g < 2; ++g) {
        const uint16_t* row = lay.generator.row(lay.groups[g].parity);
        for (int c = 0; c < 6; ++c)
            CHECK(row[c] == ((c / 3 == g) ? 1 : 0));
    }
}

TEST_CASE("uneven data split puts larger groups first") {
    StripeLayout lay = build_layout({Scheme::Azure, 7, 2, 2, 8});
    CHECK(lay.groups[0].members.size() == 4);
    CHECK(lay.groups[1].members.size() == 3);
}

TEST_CASE("uniform (6,2,2): globals join the groups, smaller first") {
    StripeLayout lay = build_layout({Scheme::UniformCauchy, 6, 2, 2, 8});
    CHECK(labels(lay, lay.groups[0].members) ==
          std::vector<std::string>{"D1", "D2", "D3", "D4"});
    CHECK(labels(lay, lay.groups[1].members) ==
          std::vector<std::string>{"D5", "D6", "G1", "G2"});
    CHECK(lay.ungrouped.empty());
    // mixed split with a remainder leads with the smaller group
    StripeLayout odd = build_layout({Scheme::UniformCauchy, 7, 2, 2, 8});
    CHECK(odd.groups[0].members.size() == 4);
    CHECK(odd.groups[1].members.size() == 5);
    // local row equals field-sum of member rows
    const uint16_t* l2 = lay.generator.row(lay.groups[1].parity);
    for (int c = 0; c < 6; ++c) {
        uint16_t want = 0;
        for (int m : lay.groups[1].members)
            want = Field::add(want, lay.generator.at(m, c));
        CHECK(l2[c] == want);
    }
}

TEST_CASE("azure+1 (6,2,2): one data group plus a parity group") {
    StripeLayout lay = build_layout({Scheme::AzurePlus1, 6, 2, 2, 8});
    REQUIRE(lay.groups.size() == 2);
    CHECK(labels(lay, lay.groups[0].members) ==
          std::vector<std::string>{"D1", "D2", "D3", "D4", "D5", "D6"});
    CHECK(labels(lay, lay.groups[1].members) == std::vector<std::string>{"G1", "G2"});
    // L2 row is the xor of the global rows
    for (int c = 0; c < 6; ++c)
        CHECK(lay.generator.at(lay.groups[1].parity, c) ==
              Field::add(lay.generator.at(6, c), lay.generator.at(7, c)));
}

TEST_CASE("optimal locals fold in all the globals") {
    StripeLayout lay = build_layout({Scheme::OptimalCauchy, 6, 2, 2, 8});
    const uint16_t* l1 = lay.generator.row(lay.groups[0].parity);
    for (int c = 0; c < 6; ++c) {
        uint16_t want = (c < 3) ? 1 : 0;
        want = Field::add(want, lay.generator.at(6, c));
        want = Field::add(want, lay.generator.at(7, c));
        CHECK(l1[c] == want);
    }
}

TEST_CASE("cp-azure (6,2,2): cascade group and beta rows") {
    StripeLayout lay = build_layout({Scheme::CPAzure, 6, 2, 2, 8});
    REQUIRE(lay.cascade_group == 2);
    CHECK(labels(lay, lay.groups[2].members) ==
          std::vector<std::string>{"L1", "L2", "G2"});
    CHECK(labels(lay, lay.ungrouped) == std::vector<std::string>{"G1"});
    // local rows carry the last alpha column on their members
    for (int c = 0; c < 6; ++c) {
        uint16_t beta = lay.generator.at(7, c);  // G2 row
        CHECK(lay.generator.at(lay.groups[c / 3].parity, c) == beta);
    }
    CHECK(lay.group_of(lay.local_index(0)) == 2);
    CHECK(lay.member_group(lay.local_index(0)) == 0);
    CHECK(lay.group_of(lay.global_index(1)) == 2);
    CHECK(lay.group_of(lay.global_index(0)) == kNoGroup);
}

TEST_CASE("cp-uniform (6,2,2) matches the published example grouping") {
    StripeLayout lay = build_layout({Scheme::CPUniform, 6, 2, 2, 8});
    CHECK(labels(lay, lay.groups[0].members) ==
          std::vector<std::string>{"D1", "D2", "D3"});
    CHECK(labels(lay, lay.groups[1].members) ==
          std::vector<std::string>{"D4", "D5", "D6", "G1"});
    CHECK(labels(lay, lay.groups[2].members) ==
          std::vector<std::string>{"L1", "L2", "G2"});
    CHECK(verify_cascade(lay));
}

TEST_CASE("data rows form the identity") {
    StripeLayout lay = build_layout({Scheme::CPUniform, 12, 2, 2, 8});
    for (int i = 0; i < 12; ++i)
        for (int c = 0; c < 12; ++c)
            CHECK(lay.generator.at(i, c) == (i == c ? 1 : 0));
}

TEST_CASE("invalid specs rejected") {
    CHECK_THROWS_AS(build_layout({Scheme::Azure, 0, 2, 2, 8}), InvalidSpec);
    CHECK_THROWS_AS(build_layout({Scheme::Azure, 6, 2, 0, 8}), InvalidSpec);
    CHECK_THROWS_AS(build_layout({Scheme::Azure, 2, 2, 3, 8}), InvalidSpec);
    CHECK_THROWS_AS(build_layout({Scheme::AzurePlus1, 6, 2, 1, 8}), InvalidSpec);
    CHECK_THROWS_AS(build_layout({Scheme::BaseMDS, 6, 2, 2, 8}), InvalidSpec);
    CHECK_THROWS_AS(build_layout({Scheme::Azure, 6, 2, 2, 12}), InvalidSpec);
    CHECK_THROWS_AS(build_layout({Scheme::Azure, 255, 3, 2, 8}), InvalidSpec);
    CHECK_NOTHROW(build_layout({Scheme::Azure, 200, 3, 2, 16}));
}

TEST_CASE("cp-uniform r=1 degenerates to beta-weighted data groups") {
    StripeLayout lay = build_layout({Scheme::CPUniform, 6, 1, 2, 8});
    CHECK(lay.coeffs.eta.empty());
    CHECK(lay.coeffs.gamma.size() == 6);
    CHECK(verify_cascade(lay));
}
