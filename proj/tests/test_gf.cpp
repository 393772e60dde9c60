#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cascade_ec/gf.hpp"

using namespace cascade_ec;

namespace {

// Independent carryless multiply with polynomial reduction.
uint32_t slow_mul(uint32_t a, uint32_t b, int w, uint32_t poly) {
    uint32_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1u << w)) a ^= poly;
    }
    return acc;
}

}  // namespace

TEST_CASE("w=8 multiplication matches shift-reduce oracle exhaustively") {
    const Field& f = Field::get(8);
    for (int a = 0; a < 256; ++a)
        for (int b = 0; b < 256; ++b)
            REQUIRE(f.mul(a, b) == slow_mul(a, b, 8, 0x11D));
}

TEST_CASE("w=16 multiplication matches oracle on random pairs") {
    const Field& f = Field::get(16);
    std::mt19937 rng(42);
    for (int i = 0; i < 5000; ++i) {
        uint16_t a = static_cast<uint16_t>(rng());
        uint16_t b = static_cast<uint16_t>(rng());
        REQUIRE(f.mul(a, b) == slow_mul(a, b, 16, 0x1100B));
    }
    CHECK(f.order() == 65536);
}

TEST_CASE("inverse and division") {
    const Field& f = Field::get(8);
    for (int a = 1; a < 256; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.div(a, a) == 1);
        CHECK(f.div(0, a) == 0);
    }
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    CHECK_THROWS_AS(f.div(3, 0), DivisionByZero);
}

TEST_CASE("addition is xor and its own inverse") {
    CHECK(Field::add(0x5A, 0xA5) == 0xFF);
    CHECK(Field::sub(0x5A, 0xA5) == Field::add(0x5A, 0xA5));
    CHECK(Field::add(0x77, 0x77) == 0);
}

TEST_CASE("field axioms hold on random triples") {
    for (int w : {8, 16}) {
        const Field& f = Field::get(w);
        std::mt19937 rng(7);
        uint32_t mask = (w == 8) ? 0xFF : 0xFFFF;
        for (int i = 0; i < 2000; ++i) {
            uint16_t a = rng() & mask, b = rng() & mask, c = rng() & mask;
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            CHECK(f.mul(a, Field::add(b, c)) ==
                  Field::add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, 1) == a);
        }
    }
}

TEST_CASE("unsupported width rejected") {
    CHECK_THROWS_AS(Field(7), std::invalid_argument);
}
