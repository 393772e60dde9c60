#include "cascade_ec/layout.hpp"

#include <algorithm>

namespace cascade_ec {

bool is_cp(Scheme s) { return s == Scheme::CPAzure || s == Scheme::CPUniform; }

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::BaseMDS: return "base-mds";
        case Scheme::Azure: return "azure";
        case Scheme::AzurePlus1: return "azure+1";
        case Scheme::OptimalCauchy: return "optimal";
        case Scheme::UniformCauchy: return "uniform";
        case Scheme::CPAzure: return "cp-azure";
        case Scheme::CPUniform: return "cp-uniform";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
    static const std::pair<const char*, Scheme> table[] = {
        {"base-mds", Scheme::BaseMDS},   {"azure", Scheme::Azure},
        {"azure+1", Scheme::AzurePlus1}, {"optimal", Scheme::OptimalCauchy},
        {"uniform", Scheme::UniformCauchy}, {"cp-azure", Scheme::CPAzure},
        {"cp-uniform", Scheme::CPUniform},
    };
    for (const auto& [n, s] : table)
        if (name == n) return s;
    return std::nullopt;
}

int StripeLayout::group_of(int block) const {
    if (is_local(block)) {
        if (cascade_group != kNoGroup) return cascade_group;
        for (size_t g = 0; g < groups.size(); ++g)
            if (groups[g].parity == block) return static_cast<int>(g);
        return kNoGroup;
    }
    if (is_global(block) && cascade_group != kNoGroup &&
        block == global_index(spec.r - 1))
        return cascade_group;
    return member_group(block);
}

int StripeLayout::member_group(int block) const {
    if (is_local(block)) {
        for (size_t g = 0; g < groups.size(); ++g)
            if (groups[g].parity == block) return static_cast<int>(g);
        return kNoGroup;
    }
    for (size_t g = 0; g < groups.size(); ++g) {
        const auto& m = groups[g].members;
        if (std::find(m.begin(), m.end(), block) != m.end()) return static_cast<int>(g);
    }
    return kNoGroup;
}

namespace {

// Split `items` into p contiguous runs differing in size by at most one.
// small_first controls whether the smaller runs lead or trail.
std::vector<std::vector<int>> split_even(const std::vector<int>& items, int p,
                                         bool small_first) {
    int n = static_cast<int>(items.size());
    int base = n / p;
    int rem = n % p;
    std::vector<std::vector<int>> out;
    out.reserve(p);
    int pos = 0;
    for (int g = 0; g < p; ++g) {
        bool large = small_first ? (g >= p - rem) : (g < rem);
        int sz = base + (large ? 1 : 0);
        out.emplace_back(items.begin() + pos, items.begin() + pos + sz);
        pos += sz;
    }
    return out;
}

void validate(const CodeSpec& s) {
    if (s.w != 8 && s.w != 16) throw InvalidSpec("w must be 8 or 16");
    if (s.k < 1 || s.r < 1) throw InvalidSpec("k and r must be positive");
    if (s.k + s.r > (1 << s.w))
        throw InvalidSpec("k + r exceeds the field size");
    switch (s.scheme) {
        case Scheme::BaseMDS:
            if (s.p != 0) throw InvalidSpec("base-mds takes p = 0");
            break;
        case Scheme::Azure:
        case Scheme::OptimalCauchy:
            if (s.p < 1) throw InvalidSpec("p must be positive");
            if (s.k < s.p) throw InvalidSpec("need k >= p for nonempty groups");
            break;
        case Scheme::AzurePlus1:
            if (s.p < 2) throw InvalidSpec("azure+1 needs p >= 2");
            if (s.k < s.p - 1) throw InvalidSpec("need k >= p-1 for nonempty groups");
            break;
        case Scheme::UniformCauchy:
            if (s.p < 1) throw InvalidSpec("p must be positive");
            if (s.k + s.r < s.p) throw InvalidSpec("need k+r >= p for nonempty groups");
            break;
        case Scheme::CPAzure:
            if (s.p < 1) throw InvalidSpec("p must be positive");
            if (s.k < s.p) throw InvalidSpec("need k >= p for nonempty groups");
            break;
        case Scheme::CPUniform:
            if (s.p < 1) throw InvalidSpec("p must be positive");
            if (s.k + s.r - 1 < s.p)
                throw InvalidSpec("need k+r-1 >= p for nonempty groups");
            break;
    }
}

}  // namespace

StripeLayout build_layout(const CodeSpec& spec) {
    validate(spec);
    const int k = spec.k, r = spec.r, p = spec.p;
    const Field& f = Field::get(spec.w);

    StripeLayout lay;
    lay.spec = spec;
    lay.blocks.reserve(spec.n());
    for (int i = 0; i < k; ++i)
        lay.blocks.push_back({i, Role::Data, "D" + std::to_string(i + 1)});
    for (int j = 0; j < r; ++j)
        lay.blocks.push_back({k + j, Role::GlobalParity, "G" + std::to_string(j + 1)});
    for (int m = 0; m < p; ++m)
        lay.blocks.push_back({k + r + m, Role::LocalParity, "L" + std::to_string(m + 1)});

    Matrix alpha = cauchy_alpha(f, default_points_a(k), default_points_b(k, r));
    lay.generator = Matrix(spec.n(), k);
    for (int i = 0; i < k; ++i) lay.generator.at(i, i) = 1;
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < k; ++i) lay.generator.at(k + j, i) = alpha.at(i, j);

    std::vector<int> data_ids(k);
    for (int i = 0; i < k; ++i) data_ids[i] = i;

    auto add_group = [&](std::vector<int> members, int local) {
        lay.groups.push_back({std::move(members), lay.local_index(local)});
    };
    auto local_row = [&](int m) { return lay.generator.row(lay.local_index(m)); };

    switch (spec.scheme) {
        case Scheme::BaseMDS: {
            for (int j = 0; j < r; ++j) lay.ungrouped.push_back(lay.global_index(j));
            break;
        }
        case Scheme::Azure: {
            auto parts = split_even(data_ids, p, /*small_first=*/false);
            for (int g = 0; g < p; ++g) {
                for (int d : parts[g]) local_row(g)[d] = 1;
                add_group(parts[g], g);
            }
            for (int j = 0; j < r; ++j) lay.ungrouped.push_back(lay.global_index(j));
            break;
        }
        case Scheme::AzurePlus1: {
            auto parts = split_even(data_ids, p - 1, /*small_first=*/false);
            for (int g = 0; g < p - 1; ++g) {
                for (int d : parts[g]) local_row(g)[d] = 1;
                add_group(parts[g], g);
            }
            std::vector<int> gmembers;
            for (int j = 0; j < r; ++j) {
                gmembers.push_back(lay.global_index(j));
                for (int c = 0; c < k; ++c)
                    local_row(p - 1)[c] =
                        Field::add(local_row(p - 1)[c], lay.generator.at(k + j, c));
            }
            add_group(gmembers, p - 1);
            break;
        }
        case Scheme::OptimalCauchy: {
            auto parts = split_even(data_ids, p, /*small_first=*/false);
            for (int g = 0; g < p; ++g) {
                for (int d : parts[g]) local_row(g)[d] = 1;
                for (int j = 0; j < r; ++j)
                    for (int c = 0; c < k; ++c)
                        local_row(g)[c] =
                            Field::add(local_row(g)[c], lay.generator.at(k + j, c));
                add_group(parts[g], g);
            }
            for (int j = 0; j < r; ++j) lay.ungrouped.push_back(lay.global_index(j));
            break;
        }
        case Scheme::UniformCauchy: {
            std::vector<int> items = data_ids;
            for (int j = 0; j < r; ++j) items.push_back(lay.global_index(j));
            auto parts = split_even(items, p, /*small_first=*/true);
            for (int g = 0; g < p; ++g) {
                for (int b : parts[g])
                    for (int c = 0; c < k; ++c)
                        local_row(g)[c] =
                            Field::add(local_row(g)[c], lay.generator.at(b, c));
                add_group(parts[g], g);
            }
            break;
        }
        case Scheme::CPAzure: {
            auto parts = split_even(data_ids, p, /*small_first=*/false);
            for (int g = 0; g < p; ++g) {
                for (int d : parts[g]) local_row(g)[d] = alpha.at(d, r - 1);
                add_group(parts[g], g);
            }
            for (int j = 0; j < r - 1; ++j) lay.ungrouped.push_back(lay.global_index(j));
            break;
        }
        case Scheme::CPUniform: {
            if (r >= 2) {
                lay.coeffs = combination_coefficients(f, default_points_a(k),
                                                      default_points_b(k, r));
            } else {
                // r = 1 degenerates to data-only groups with beta weights
                for (int i = 0; i < k; ++i) lay.coeffs.gamma.push_back(alpha.at(i, 0));
            }
            std::vector<int> items = data_ids;
            for (int j = 0; j < r - 1; ++j) items.push_back(lay.global_index(j));
            auto parts = split_even(items, p, /*small_first=*/true);
            for (int g = 0; g < p; ++g) {
                for (int b : parts[g]) {
                    uint16_t coeff = lay.is_data(b) ? lay.coeffs.gamma[b]
                                                    : lay.coeffs.eta[b - k];
                    for (int c = 0; c < k; ++c)
                        local_row(g)[c] = Field::add(
                            local_row(g)[c], f.mul(coeff, lay.generator.at(b, c)));
                }
                add_group(parts[g], g);
            }
            break;
        }
    }

    if (is_cp(spec.scheme)) {
        Group cascade;
        for (int m = 0; m < p; ++m) cascade.members.push_back(lay.local_index(m));
        cascade.members.push_back(lay.global_index(r - 1));
        lay.cascade_group = static_cast<int>(lay.groups.size());
        lay.groups.push_back(std::move(cascade));
    }
    return lay;
}

}  // namespace cascade_ec
