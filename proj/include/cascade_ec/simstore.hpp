#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cascade_ec/codec.hpp"
#include "cascade_ec/planner.hpp"

namespace cascade_ec {

// One contiguous run of file bytes inside a data block.
struct Extent {
    long long stripe = 0;
    int block = 0;            // data block index within the stripe
    long long offset = 0;     // byte offset within the block
    long long length = 0;
    long long file_offset = 0;
};

struct FileEntry {
    std::string id;
    long long size = 0;
    std::vector<Extent> extents;
};

struct UnknownFile : std::invalid_argument {
    explicit UnknownFile(const std::string& id)
        : std::invalid_argument("unknown file id: " + id) {}
};

struct IoAccounting {
    long long bytes_read = 0;         // distinct bytes fetched from survivors
    long long bytes_transferred = 0;  // bytes moved to the reader
    long long blocks_accessed = 0;    // distinct (stripe, block) touched
    long long repeated_bytes_avoided = 0;  // overlap between decode and file reads
    long long baseline_bytes_read = 0;     // whole-block fetches for comparison
    long long undecodable = 0;             // failed repair attempts (campaigns)
};

// File placement across sequentially filled stripes. Data content is virtual:
// a seeded deterministic byte stream, with parity ranges computed on demand
// from the generator rows, so multi-megablock stores cost no memory.
class StripeStore {
public:
    StripeStore(StripeLayout layout, long long block_size, uint64_t content_seed = 7);

    // First-fit sequential packing; extents are contiguous and may span
    // blocks and stripes. Rejects empty or negative sizes.
    void pack_files(const std::vector<std::pair<std::string, long long>>& files);

    const StripeLayout& layout() const { return layout_; }
    long long block_size() const { return block_size_; }
    long long stripes_used() const { return stripes_used_; }
    const std::vector<FileEntry>& files() const { return files_; }
    const FileEntry& file(const std::string& id) const;

    // Raw bytes of any block range (parities derived from the data stream).
    BlockBuffer read_range(long long stripe, int block, long long offset,
                           long long length) const;

    // The file's bytes with `failed_nodes` erased, reconstructing lost extents
    // from range-restricted repair-plan reads. Accounting covers exactly the
    // simulated reads; baseline_bytes_read is the whole-block alternative.
    std::pair<BlockBuffer, IoAccounting> degraded_read(
        const std::string& id, const std::vector<int>& failed_nodes) const;

    // Full-block repair of each failure pattern under each scheme (same k,r,p
    // as this store); bytes are plan cost times block size.
    std::map<std::string, IoAccounting> run_repair_campaign(
        const std::vector<std::vector<int>>& patterns,
        const std::vector<Scheme>& schemes) const;

private:
    StripeLayout layout_;
    long long block_size_;
    uint64_t content_seed_;
    long long stripes_used_ = 0;
    std::vector<FileEntry> files_;
    std::map<std::string, size_t> index_;
};

// Log-uniform file sizes over [min_bytes, max_bytes], seeded.
std::vector<std::pair<std::string, long long>> synth_workload(
    int count, uint64_t seed, long long min_bytes = 5 * 1024,
    long long max_bytes = 30 * 1024 * 1024);

}  // namespace cascade_ec
