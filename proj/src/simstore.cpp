#include "cascade_ec/simstore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

namespace cascade_ec {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void fill_data_bytes(uint64_t seed, long long stripe, int block, long long off,
                     long long len, uint8_t* out) {
    long long i = 0;
    while (i < len) {
        long long pos = off + i;
        long long word = pos >> 3;
        uint64_t v = splitmix64(seed ^ splitmix64(static_cast<uint64_t>(stripe) * 0x100000001b3ULL ^
                                                  (static_cast<uint64_t>(block) << 40) ^
                                                  static_cast<uint64_t>(word)));
        int shift = static_cast<int>(pos & 7);
        while (shift < 8 && i < len) {
            out[i++] = static_cast<uint8_t>(v >> (8 * shift));
            ++shift;
        }
    }
}

using Ival = std::pair<long long, long long>;  // [first, second)

// Insert an interval into a sorted disjoint set; returns bytes newly covered.
long long ival_add(std::vector<Ival>& set, Ival v) {
    if (v.second <= v.first) return 0;
    std::vector<Ival> merged;
    long long added = v.second - v.first;
    for (const Ival& e : set) {
        if (e.second < v.first || e.first > v.second) {
            merged.push_back(e);
        } else {
            added -= std::min(e.second, v.second) - std::max(e.first, v.first);
            v.first = std::min(v.first, e.first);
            v.second = std::max(v.second, e.second);
        }
    }
    merged.push_back(v);
    std::sort(merged.begin(), merged.end());
    set = std::move(merged);
    return std::max(added, 0LL);
}

}  // namespace

StripeStore::StripeStore(StripeLayout layout, long long block_size,
                         uint64_t content_seed)
    : layout_(std::move(layout)), block_size_(block_size), content_seed_(content_seed) {
    if (block_size_ < 1) throw std::invalid_argument("block size must be positive");
}

const FileEntry& StripeStore::file(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownFile(id);
    return files_[it->second];
}

void StripeStore::pack_files(
    const std::vector<std::pair<std::string, long long>>& files) {
    const int k = layout_.k();
    long long stripe = stripes_used_;  // later calls start on a fresh stripe
    int block = 0;
    long long offset = 0;
    for (const auto& [id, size] : files) {
        if (size < 1) throw std::invalid_argument("file size must be positive");
        if (index_.count(id)) throw std::invalid_argument("duplicate file id: " + id);
        FileEntry fe{id, size, {}};
        long long remaining = size, fo = 0;
        while (remaining > 0) {
            long long len = std::min(remaining, block_size_ - offset);
            fe.extents.push_back({stripe, block, offset, len, fo});
            remaining -= len;
            fo += len;
            offset += len;
            if (offset == block_size_) {
                offset = 0;
                if (++block == k) {
                    block = 0;
                    ++stripe;
                }
            }
        }
        index_[fe.id] = files_.size();
        files_.push_back(std::move(fe));
    }
    stripes_used_ = stripe + ((block > 0 || offset > 0) ? 1 : 0);
}

BlockBuffer StripeStore::read_range(long long stripe, int block, long long offset,
                                    long long length) const {
    BlockBuffer out(length, 0);
    if (layout_.is_data(block)) {
        fill_data_bytes(content_seed_, stripe, block, offset, length, out.data());
        return out;
    }
    const Field& f = layout_.field();
    const uint16_t* row = layout_.generator.row(block);
    BlockBuffer tmp(length);
    for (int c = 0; c < layout_.k(); ++c) {
        if (row[c] == 0) continue;
        fill_data_bytes(content_seed_, stripe, c, offset, length, tmp.data());
        accumulate(f, row[c], tmp.data(), out.data(), length);
    }
    return out;
}

std::pair<BlockBuffer, IoAccounting> StripeStore::degraded_read(
    const std::string& id, const std::vector<int>& failed_nodes) const {
    const FileEntry& fe = file(id);
    std::vector<char> failed(layout_.n(), 0);
    std::vector<int> fsorted;
    for (int b : failed_nodes)
        if (b >= 0 && b < layout_.n() && !failed[b]) {
            failed[b] = 1;
            fsorted.push_back(b);
        }
    std::sort(fsorted.begin(), fsorted.end());

    bool any_lost = false;
    for (const Extent& e : fe.extents) any_lost |= failed[e.block] != 0;

    RepairPlan plan;
    std::vector<char> step_needed;
    if (any_lost) {
        plan = plan_multi(layout_, fsorted);
        resolve_coefficients(layout_, plan);
        // backward closure: only steps feeding the file's lost blocks matter
        std::vector<char> target_needed(layout_.n(), 0);
        for (const Extent& e : fe.extents)
            if (failed[e.block]) target_needed[e.block] = 1;
        step_needed.assign(plan.steps.size(), 0);
        for (size_t si = 0; si < plan.steps.size(); ++si)
            if (target_needed[plan.steps[si].target]) step_needed[si] = 1;
        // propagate source needs through earlier producing steps
        for (int pass = 0; pass < static_cast<int>(plan.steps.size()); ++pass) {
            bool changed = false;
            for (size_t si = 0; si < plan.steps.size(); ++si) {
                if (!step_needed[si]) continue;
                for (int s : plan.steps[si].sources) {
                    for (size_t sj = 0; sj < si; ++sj) {
                        if (plan.steps[sj].target == s && !step_needed[sj]) {
                            step_needed[sj] = 1;
                            changed = true;
                        }
                    }
                }
            }
            if (!changed) break;
        }
    }

    IoAccounting acc;
    // per (stripe, block) disjoint ranges already fetched
    std::map<std::pair<long long, int>, std::vector<Ival>> fetched;
    // needed output ranges per (stripe, target block)
    std::map<std::pair<long long, int>, std::vector<Ival>> needed;
    std::set<long long> lost_stripes;
    for (const Extent& e : fe.extents) {
        if (!failed[e.block]) continue;
        ival_add(needed[{e.stripe, e.block}], {e.offset, e.offset + e.length});
        lost_stripes.insert(e.stripe);
    }

    // phase 1: propagate ranges backward through the plan and fetch sources
    for (long long s : lost_stripes) {
        for (int si = static_cast<int>(plan.steps.size()) - 1; si >= 0; --si) {
            if (!step_needed[si]) continue;
            const RepairStep& st = plan.steps[si];
            auto it = needed.find({s, st.target});
            if (it == needed.end()) continue;
            for (const Ival& iv : it->second) {
                for (int src : st.sources) {
                    bool intermediate = false;
                    for (int sj = 0; sj < si; ++sj)
                        if (step_needed[sj] && plan.steps[sj].target == src) {
                            intermediate = true;
                            break;
                        }
                    if (intermediate) {
                        ival_add(needed[{s, src}], iv);
                    } else {
                        long long nw = ival_add(fetched[{s, src}], iv);
                        acc.bytes_read += nw;
                        acc.repeated_bytes_avoided += (iv.second - iv.first) - nw;
                    }
                }
            }
        }
    }

    // phase 2: execute needed steps per stripe over the needed ranges
    std::map<std::pair<long long, int>, std::vector<std::pair<Ival, BlockBuffer>>> made;
    const Field& f = layout_.field();
    auto source_bytes = [&](long long s, int src, Ival iv) -> BlockBuffer {
        auto it = made.find({s, src});
        if (it != made.end()) {
            for (const auto& [piv, buf] : it->second) {
                if (piv.first <= iv.first && iv.second <= piv.second) {
                    return BlockBuffer(buf.begin() + (iv.first - piv.first),
                                       buf.begin() + (iv.second - piv.first));
                }
            }
        }
        return read_range(s, src, iv.first, iv.second - iv.first);
    };
    for (long long s : lost_stripes) {
        for (size_t si = 0; si < plan.steps.size(); ++si) {
            if (!step_needed[si]) continue;
            const RepairStep& st = plan.steps[si];
            auto it = needed.find({s, st.target});
            if (it == needed.end()) continue;
            for (const Ival& iv : it->second) {
                BlockBuffer out(iv.second - iv.first, 0);
                for (size_t i = 0; i < st.sources.size(); ++i) {
                    if (st.coeffs[i] == 0) continue;
                    BlockBuffer sb = source_bytes(s, st.sources[i], iv);
                    accumulate(f, st.coeffs[i], sb.data(), out.data(),
                               out.size());
                }
                made[{s, st.target}].push_back({iv, std::move(out)});
            }
        }
    }

    // phase 3: assemble the file, reusing already-fetched ranges
    BlockBuffer bytes(fe.size);
    for (const Extent& e : fe.extents) {
        Ival iv{e.offset, e.offset + e.length};
        BlockBuffer part;
        if (failed[e.block]) {
            part = source_bytes(e.stripe, e.block, iv);
        } else {
            long long nw = ival_add(fetched[{e.stripe, e.block}], iv);
            acc.bytes_read += nw;
            acc.repeated_bytes_avoided += e.length - nw;
            part = read_range(e.stripe, e.block, e.offset, e.length);
        }
        std::copy(part.begin(), part.end(), bytes.begin() + e.file_offset);
    }

    acc.bytes_transferred = acc.bytes_read;
    acc.blocks_accessed = static_cast<long long>(fetched.size());
    // block-granularity baseline: whole plan sources plus whole surviving blocks
    std::set<std::pair<long long, int>> baseline_blocks;
    for (long long s : lost_stripes)
        for (int b : plan.accessed) baseline_blocks.insert({s, b});
    for (const Extent& e : fe.extents)
        if (!failed[e.block]) baseline_blocks.insert({e.stripe, e.block});
    acc.baseline_bytes_read =
        static_cast<long long>(baseline_blocks.size()) * block_size_;
    return {std::move(bytes), acc};
}

std::map<std::string, IoAccounting> StripeStore::run_repair_campaign(
    const std::vector<std::vector<int>>& patterns,
    const std::vector<Scheme>& schemes) const {
    std::map<std::string, IoAccounting> out;
    for (Scheme sch : schemes) {
        CodeSpec spec = layout_.spec;
        spec.scheme = sch;
        if (sch == Scheme::BaseMDS) spec.p = 0;
        StripeLayout lay = build_layout(spec);
        IoAccounting acc;
        for (const auto& pattern : patterns) {
            bool valid = true;
            for (int b : pattern) valid &= b >= 0 && b < lay.n();
            if (!valid) {
                ++acc.undecodable;
                continue;
            }
            try {
                RepairPlan plan = plan_multi(lay, pattern);
                acc.bytes_read += static_cast<long long>(plan.cost()) * block_size_;
                acc.blocks_accessed += plan.cost();
            } catch (const Undecodable&) {
                ++acc.undecodable;
            }
        }
        acc.bytes_transferred = acc.bytes_read;
        out[scheme_name(sch)] = acc;
    }
    return out;
}

std::vector<std::pair<std::string, long long>> synth_workload(int count,
                                                              uint64_t seed,
                                                              long long min_bytes,
                                                              long long max_bytes) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(std::log(static_cast<double>(min_bytes)),
                                             std::log(static_cast<double>(max_bytes)));
    std::vector<std::pair<std::string, long long>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        long long size = std::llround(std::exp(d(rng)));
        size = std::clamp(size, min_bytes, max_bytes);
        char buf[16];
        std::snprintf(buf, sizeof(buf), "file-%04d", i + 1);
        out.emplace_back(buf, size);
    }
    return out;
}

}  // namespace cascade_ec
