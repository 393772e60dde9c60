#include "cascade_ec/gf.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace cascade_ec {

namespace {
uint32_t poly_for_width(int w) {
    switch (w) {
        case 8: return 0x11D;
        case 16: return 0x1100B;
        default: throw std::invalid_argument("unsupported field width (use 8 or 16)");
    }
}
}  // namespace

Field::Field(int w) : w_(w) {
    uint32_t poly = poly_for_width(w);
    order_ = 1u << w;
    exp_.assign(2 * (order_ - 1), 0);
    log_.assign(order_, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < order_ - 1; ++i) {
        exp_[i] = static_cast<uint16_t>(x);
        exp_[i + order_ - 1] = static_cast<uint16_t>(x);
        log_[x] = i;
        x <<= 1;
        if (x & order_) x ^= poly;
    }
}

const Field& Field::get(int w) {
    static std::once_flag once8, once16;
    static std::unique_ptr<Field> f8, f16;
    if (w == 8) {
        std::call_once(once8, [] { f8 = std::make_unique<Field>(8); });
        return *f8;
    }
    if (w == 16) {
        std::call_once(once16, [] { f16 = std::make_unique<Field>(16); });
        return *f16;
    }
    throw std::invalid_argument("unsupported field width (use 8 or 16)");
}

}  // namespace cascade_ec
