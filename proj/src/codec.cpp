#include "cascade_ec/codec.hpp"

#include <algorithm>
#include <cstring>

namespace cascade_ec {

void accumulate(const Field& f, uint16_t coeff, const uint8_t* src, uint8_t* dst,
                size_t len) {
    if (coeff == 0) return;
    if (f.width() == 8) {
        if (coeff == 1) {
            for (size_t i = 0; i < len; ++i) dst[i] ^= src[i];
            return;
        }
        uint8_t tbl[256];
        tbl[0] = 0;
        const uint16_t* exp = f.exp_table();
        const uint32_t* log = f.log_table();
        uint32_t lc = log[coeff];
        for (int x = 1; x < 256; ++x) tbl[x] = static_cast<uint8_t>(exp[lc + log[x]]);
        for (size_t i = 0; i < len; ++i) dst[i] ^= tbl[src[i]];
        return;
    }
    if (len % 2 != 0) throw LengthMismatch();
    for (size_t i = 0; i < len; i += 2) {
        uint16_t v = static_cast<uint16_t>(src[i] | (src[i + 1] << 8));
        uint16_t out = f.mul(coeff, v);
        dst[i] ^= static_cast<uint8_t>(out & 0xff);
        dst[i + 1] ^= static_cast<uint8_t>(out >> 8);
    }
}

std::vector<BlockBuffer> encode(const StripeLayout& lay,
                                const std::vector<BlockBuffer>& data) {
    const int k = lay.k();
    if (static_cast<int>(data.size()) != k) throw LengthMismatch();
    const size_t len = data.empty() ? 0 : data[0].size();
    for (const auto& d : data)
        if (d.size() != len) throw LengthMismatch();
    if (lay.spec.w == 16 && len % 2 != 0) throw LengthMismatch();

    const Field& f = lay.field();
    std::vector<BlockBuffer> out(lay.n());
    for (int i = 0; i < k; ++i) out[i] = data[i];
    for (int b = k; b < lay.n(); ++b) {
        out[b].assign(len, 0);
        const uint16_t* row = lay.generator.row(b);
        for (int c = 0; c < k; ++c)
            accumulate(f, row[c], data[c].data(), out[b].data(), len);
    }
    return out;
}

std::vector<std::optional<BlockBuffer>> reconstruct(
    const StripeLayout& lay, RepairPlan& plan,
    const std::vector<std::optional<BlockBuffer>>& blocks,
    std::vector<int>* reads_out) {
    resolve_coefficients(lay, plan);
    const Field& f = lay.field();
    size_t len = 0;
    for (const auto& b : blocks)
        if (b) {
            len = b->size();
            break;
        }
    std::vector<std::optional<BlockBuffer>> produced(lay.n());
    std::vector<int> reads;
    for (const RepairStep& step : plan.steps) {
        BlockBuffer acc(len, 0);
        for (size_t i = 0; i < step.sources.size(); ++i) {
            int s = step.sources[i];
            const BlockBuffer* buf;
            if (produced[s]) {
                buf = &*produced[s];
            } else if (s < static_cast<int>(blocks.size()) && blocks[s]) {
                buf = &*blocks[s];
                reads.push_back(s);
            } else {
                throw PlanSourceUnavailable(s);
            }
            if (buf->size() != len) throw LengthMismatch();
            accumulate(f, step.coeffs[i], buf->data(), acc.data(), len);
        }
        produced[step.target] = std::move(acc);
    }
    std::sort(reads.begin(), reads.end());
    reads.erase(std::unique(reads.begin(), reads.end()), reads.end());
    if (reads_out) *reads_out = std::move(reads);
    return produced;
}

std::vector<BlockBuffer> decode_full(
    const StripeLayout& lay, const std::vector<std::optional<BlockBuffer>>& blocks) {
    const int k = lay.k();
    const Field& f = lay.field();
    // greedily pick available rows that raise the rank until we have k
    std::vector<int> chosen;
    Matrix rows(0, k);
    int rank = 0;
    for (int b = 0; b < lay.n() && rank < k; ++b) {
        if (b >= static_cast<int>(blocks.size()) || !blocks[b]) continue;
        Matrix trial(rank + 1, k);
        for (int i = 0; i < rank; ++i)
            for (int c = 0; c < k; ++c) trial.at(i, c) = lay.generator.at(chosen[i], c);
        for (int c = 0; c < k; ++c) trial.at(rank, c) = lay.generator.at(b, c);
        if (mat_rank(f, trial) == rank + 1) {
            chosen.push_back(b);
            ++rank;
        }
    }
    if (rank < k) throw Undecodable();

    Matrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c) m.at(i, c) = lay.generator.at(chosen[i], c);
    Matrix inv = mat_inverse(f, m);

    size_t len = blocks[chosen[0]]->size();
    std::vector<BlockBuffer> data(k);
    for (int d = 0; d < k; ++d) {
        data[d].assign(len, 0);
        for (int i = 0; i < k; ++i) {
            const auto& buf = *blocks[chosen[i]];
            if (buf.size() != len) throw LengthMismatch();
            accumulate(f, inv.at(d, i), buf.data(), data[d].data(), len);
        }
    }
    return data;
}

}  // namespace cascade_ec
