#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cascade_ec {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in GF(2^w)") {}
};

// GF(2^w) arithmetic over log/antilog tables. Supported widths: 8 and 16.
// w=8 uses the reduction polynomial x^8+x^4+x^3+x^2+1 (0x11D),
// w=16 uses x^16+x^12+x^3+x+1 (0x1100B); 2 is primitive for both.
class Field {
public:
    explicit Field(int w);

    int width() const { return w_; }
    uint32_t order() const { return order_; }

    static uint16_t add(uint16_t a, uint16_t b) { return a ^ b; }
    static uint16_t sub(uint16_t a, uint16_t b) { return a ^ b; }

    uint16_t mul(uint16_t a, uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    uint16_t div(uint16_t a, uint16_t b) const {
        if (b == 0) throw DivisionByZero();
        if (a == 0) return 0;
        return exp_[log_[a] + order_ - 1 - log_[b]];
    }

    uint16_t inv(uint16_t a) const {
        if (a == 0) throw DivisionByZero();
        return exp_[order_ - 1 - log_[a]];
    }

    // Cached per-width instance (tables built once).
    static const Field& get(int w);

    const uint16_t* exp_table() const { return exp_.data(); }
    const uint32_t* log_table() const { return log_.data(); }

private:
    int w_;
    uint32_t order_;
    std::vector<uint16_t> exp_;  // 2*(order-1) entries, doubled to skip a mod
    std::vector<uint32_t> log_;
};

}  // namespace cascade_ec
