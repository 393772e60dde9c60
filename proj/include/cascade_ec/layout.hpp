#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cascade_ec/coeffs.hpp"
#include "cascade_ec/matrix.hpp"

namespace cascade_ec {

enum class Scheme {
    BaseMDS,
    Azure,
    AzurePlus1,
    OptimalCauchy,
    UniformCauchy,
    CPAzure,
    CPUniform,
};

bool is_cp(Scheme s);
const char* scheme_name(Scheme s);               // canonical CLI name, e.g. "cp-azure"
std::optional<Scheme> scheme_from_name(const std::string& name);

enum class Role { Data, LocalParity, GlobalParity };

struct CodeSpec {
    Scheme scheme = Scheme::BaseMDS;
    int k = 0;
    int r = 0;
    int p = 0;
    int w = 8;

    int n() const { return k + r + p; }
};

struct InvalidSpec : std::invalid_argument {
    explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

struct BlockId {
    int index;
    Role role;
    std::string label;  // D1.., G1.., L1..
};

// A local repair group: member blocks plus the local parity protecting them.
// The cascaded group of CP schemes has members {L_1..L_p, G_r} and parity -1.
struct Group {
    std::vector<int> members;
    int parity = -1;
};

constexpr int kNoGroup = -1;

struct StripeLayout {
    CodeSpec spec;
    std::vector<BlockId> blocks;  // data 0..k-1, globals k..k+r-1, locals k+r..n-1
    std::vector<Group> groups;    // data/uniform groups; cascaded group last for CP
    int cascade_group = kNoGroup; // index into groups, or kNoGroup
    std::vector<int> ungrouped;   // global parities with no local group (Azure-style)
    Matrix generator;             // n x k, data rows form the identity
    CombinationCoeffs coeffs;     // populated for CP-Uniform (empty otherwise)

    int n() const { return spec.n(); }
    int k() const { return spec.k; }
    int r() const { return spec.r; }
    int p() const { return spec.p; }

    int data_index(int i) const { return i; }                       // i in [0,k)
    int global_index(int j) const { return spec.k + j; }            // j in [0,r)
    int local_index(int m) const { return spec.k + spec.r + m; }    // m in [0,p)

    bool is_data(int b) const { return blocks[b].role == Role::Data; }
    bool is_global(int b) const { return blocks[b].role == Role::GlobalParity; }
    bool is_local(int b) const { return blocks[b].role == Role::LocalParity; }

    const Field& field() const { return Field::get(spec.w); }

    // Group index of a block (cascade_group for CP locals and G_r), or
    // kNoGroup for ungrouped global parities.
    int group_of(int block) const;

    // Group whose member list contains the block, or kNoGroup. For CP locals
    // this is the group they protect (unlike group_of, which reports the
    // cascaded group).
    int member_group(int block) const;
};

StripeLayout build_layout(const CodeSpec& spec);

}  // namespace cascade_ec
