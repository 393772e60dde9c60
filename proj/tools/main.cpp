#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "cascade_ec/codec.hpp"
#include "cascade_ec/metrics.hpp"
#include "cascade_ec/presets.hpp"
#include "cascade_ec/reliability.hpp"
#include "cascade_ec/simstore.hpp"

using json = nlohmann::json;
using namespace cascade_ec;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_width() {
    const char* w = std::getenv("CASCADE_EC_W");
    if (!w) return 8;
    std::string s(w);
    if (s == "8") return 8;
    if (s == "16") return 16;
    throw UsageError("CASCADE_EC_W must be 8 or 16");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<ParamPreset> parse_presets(const std::string& arg) {
    if (arg == "all")
        return {kPresets.begin(), kPresets.end()};
    std::vector<ParamPreset> out;
    for (const std::string& label : split_list(arg)) {
        auto p = preset_by_label(label);
        if (!p) throw UsageError("unknown preset: " + label);
        out.push_back(*p);
    }
    if (out.empty()) throw UsageError("no presets given");
    return out;
}

std::vector<Scheme> parse_schemes(const std::string& arg) {
    if (arg == "all")
        return {Scheme::Azure,         Scheme::AzurePlus1, Scheme::OptimalCauchy,
                Scheme::UniformCauchy, Scheme::CPAzure,    Scheme::CPUniform};
    std::vector<Scheme> out;
    for (const std::string& name : split_list(arg)) {
        auto s = scheme_from_name(name);
        if (!s) throw UsageError("unknown scheme: " + name);
        out.push_back(*s);
    }
    if (out.empty()) throw UsageError("no schemes given");
    return out;
}

StripeLayout make_layout(Scheme scheme, const ParamPreset& p, int w) {
    return build_layout({scheme, p.k, p.r, scheme == Scheme::BaseMDS ? 0 : p.p, w});
}

json layout_json(const StripeLayout& lay) {
    json j;
    j["scheme"] = scheme_name(lay.spec.scheme);
    j["k"] = lay.k();
    j["r"] = lay.r();
    j["p"] = lay.p();
    j["w"] = lay.spec.w;
    for (const BlockId& b : lay.blocks)
        j["blocks"].push_back({{"index", b.index},
                               {"label", b.label},
                               {"role", b.role == Role::Data           ? "data"
                                        : b.role == Role::LocalParity ? "local"
                                                                      : "global"}});
    j["groups"] = json::array();
    for (const Group& g : lay.groups) {
        json gj;
        for (int m : g.members) gj["members"].push_back(lay.blocks[m].label);
        gj["parity"] = g.parity >= 0 ? json(lay.blocks[g.parity].label) : json();
        j["groups"].push_back(gj);
    }
    j["cascadeGroup"] = lay.cascade_group;
    j["ungrouped"] = json::array();
    for (int b : lay.ungrouped) j["ungrouped"].push_back(lay.blocks[b].label);
    j["generator"] = json::array();
    for (int rr = 0; rr < lay.generator.rows; ++rr) {
        json row = json::array();
        for (int c = 0; c < lay.generator.cols; ++c) row.push_back(lay.generator.at(rr, c));
        j["generator"].push_back(row);
    }
    return j;
}

json plan_json(const StripeLayout& lay, const RepairPlan& plan) {
    json j;
    j["mode"] = repair_mode_name(plan.mode);
    j["cost"] = plan.cost();
    for (int b : plan.accessed) j["accessed"].push_back(lay.blocks[b].label);
    j["steps"] = json::array();
    for (const RepairStep& st : plan.steps) {
        json sj;
        sj["target"] = lay.blocks[st.target].label;
        for (int s : st.sources) sj["sources"].push_back(lay.blocks[s].label);
        for (uint16_t c : st.coeffs) sj["coeffs"].push_back(c);
        j["steps"].push_back(sj);
    }
    return j;
}

int block_by_label(const StripeLayout& lay, const std::string& label) {
    for (const BlockId& b : lay.blocks)
        if (b.label == label) return b.index;
    throw UsageError("unknown block label: " + label);
}

// ---- analyze -------------------------------------------------------------

int cmd_analyze(const std::string& presets_arg, const std::string& schemes_arg,
                const std::string& format, bool dump_layout) {
    auto presets = parse_presets(presets_arg);
    auto schemes = parse_schemes(schemes_arg);
    int w = env_width();

    if (dump_layout) {
        json all = json::array();
        for (Scheme s : schemes)
            for (const ParamPreset& p : presets)
                all.push_back(layout_json(make_layout(s, p, w)));
        std::cout << all.dump(2) << "\n";
        return 0;
    }

    std::map<std::pair<std::string, std::string>, MetricReport> grid;
    for (Scheme s : schemes)
        for (const ParamPreset& p : presets)
            grid[{scheme_name(s), p.label}] = compute_metrics(make_layout(s, p, w));

    auto value = [](const MetricReport& r, int metric) {
        switch (metric) {
            case 0: return r.adrc;
            case 1: return r.arc1;
            case 2: return r.arc2;
            case 3: return r.local_repair_portion;
            default: return r.effective_local_portion;
        }
    };
    static const char* metric_names[] = {"ADRC", "ARC1", "ARC2", "LocalPortion",
                                         "EffectiveLocalPortion"};

    if (format == "table") {
        for (int m = 0; m < 5; ++m) {
            std::cout << "== " << metric_names[m] << "\n";
            std::cout << "scheme";
            for (const ParamPreset& p : presets) std::cout << "\t" << p.label;
            std::cout << "\n";
            for (Scheme s : schemes) {
                std::cout << scheme_name(s);
                for (const ParamPreset& p : presets) {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%.2f",
                                  value(grid[{scheme_name(s), p.label}], m));
                    std::cout << "\t" << buf;
                }
                std::cout << "\n";
            }
            std::cout << "\n";
        }
    } else if (format == "csv") {
        std::cout << "scheme,preset,adrc,arc1,arc2,localPortion,effectivePortion\n";
        for (Scheme s : schemes)
            for (const ParamPreset& p : presets) {
                const MetricReport& r = grid[{scheme_name(s), p.label}];
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%s,%s,%.4f,%.4f,%.4f,%.4f,%.4f",
                              scheme_name(s), p.label, r.adrc, r.arc1, r.arc2,
                              r.local_repair_portion, r.effective_local_portion);
                std::cout << buf << "\n";
            }
    } else if (format == "json") {
        json out;
        for (Scheme s : schemes)
            for (const ParamPreset& p : presets) {
                const MetricReport& r = grid[{scheme_name(s), p.label}];
                out[scheme_name(s)][p.label] = {
                    {"adrc", r.adrc},
                    {"arc1", r.arc1},
                    {"arc2", r.arc2},
                    {"localPortion", r.local_repair_portion},
                    {"effectivePortion", r.effective_local_portion}};
            }
        std::cout << out.dump(2) << "\n";
    } else {
        throw UsageError("unknown format: " + format);
    }
    return 0;
}

// ---- encode / repair -----------------------------------------------------

StripeLayout layout_from_flags(const std::string& scheme_arg,
                               const std::string& preset_arg, int k, int r, int p) {
    auto s = scheme_from_name(scheme_arg);
    if (!s) throw UsageError("unknown scheme: " + scheme_arg);
    if (!preset_arg.empty()) {
        auto pp = preset_by_label(preset_arg);
        if (!pp) throw UsageError("unknown preset: " + preset_arg);
        return make_layout(*s, *pp, env_width());
    }
    if (k <= 0) throw UsageError("give --preset or --k/--r/--p");
    return build_layout({*s, k, r, *s == Scheme::BaseMDS ? 0 : p, env_width()});
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const uint8_t* data, size_t len) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write: " + path);
    out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(len));
}

int cmd_encode(const StripeLayout& lay, const std::string& input,
               const std::string& out_dir, long long block_size, bool dump_layout) {
    if (dump_layout) {
        std::cout << layout_json(lay).dump(2) << "\n";
        return 0;
    }
    std::vector<uint8_t> bytes = read_file(input);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const int k = lay.k();
    long long stripe_bytes = block_size * k;
    long long nstripes = std::max<long long>(
        1, (static_cast<long long>(bytes.size()) + stripe_bytes - 1) / stripe_bytes);
    json manifest;
    manifest["scheme"] = scheme_name(lay.spec.scheme);
    manifest["k"] = lay.k();
    manifest["r"] = lay.r();
    manifest["p"] = lay.p();
    manifest["w"] = lay.spec.w;
    manifest["blockSize"] = block_size;
    manifest["inputSize"] = bytes.size();
    manifest["input"] = input;
    manifest["stripes"] = json::array();
    for (long long s = 0; s < nstripes; ++s) {
        std::string sid = "s" + std::to_string(s);
        std::vector<BlockBuffer> data(k);
        for (int d = 0; d < k; ++d) {
            data[d].assign(block_size, 0);
            long long off = s * stripe_bytes + d * block_size;
            long long len = std::min<long long>(
                block_size, std::max<long long>(0, (long long)bytes.size() - off));
            if (len > 0) std::copy_n(bytes.begin() + off, len, data[d].begin());
        }
        std::vector<BlockBuffer> stripe = encode(lay, data);
        json sj;
        sj["id"] = sid;
        for (int b = 0; b < lay.n(); ++b) {
            std::string fname = sid + "_" + lay.blocks[b].label + ".bin";
            write_file(out_dir + "/" + fname, stripe[b].data(), stripe[b].size());
            sj["blocks"].push_back(fname);
        }
        manifest["stripes"].push_back(sj);
    }
    std::ofstream mf(out_dir + "/manifest.json");
    if (!mf) throw UsageError("cannot write manifest in " + out_dir);
    mf << manifest.dump(2) << "\n";
    std::cout << "encoded " << nstripes << " stripe(s) into " << out_dir << "\n";
    return 0;
}

int cmd_repair(const std::string& manifest_path, const std::string& failed_arg,
               bool explain, bool dump_layout) {
    json manifest = json::parse(read_file(manifest_path));
    auto s = scheme_from_name(manifest["scheme"].get<std::string>());
    if (!s) throw UsageError("manifest has unknown scheme");
    StripeLayout lay = build_layout({*s, manifest["k"], manifest["r"], manifest["p"],
                                     manifest["w"]});
    if (dump_layout) {
        std::cout << layout_json(lay).dump(2) << "\n";
        return 0;
    }
    std::vector<int> failed;
    for (const std::string& label : split_list(failed_arg))
        failed.push_back(block_by_label(lay, label));
    if (failed.empty()) throw UsageError("give --failed block labels");
    std::sort(failed.begin(), failed.end());
    failed.erase(std::unique(failed.begin(), failed.end()), failed.end());

    RepairPlan plan = plan_multi(lay, failed);
    resolve_coefficients(lay, plan);
    if (explain) {
        std::cout << plan_json(lay, plan).dump(2) << "\n";
        return 0;
    }
    std::string dir = ".";
    auto slash = manifest_path.find_last_of('/');
    if (slash != std::string::npos) dir = manifest_path.substr(0, slash);
    std::vector<char> is_failed(lay.n(), 0);
    for (int b : failed) is_failed[b] = 1;
    for (const json& sj : manifest["stripes"]) {
        std::string sid = sj["id"].get<std::string>();
        std::vector<std::optional<BlockBuffer>> blocks(lay.n());
        for (int b = 0; b < lay.n(); ++b) {
            if (is_failed[b]) continue;
            blocks[b] = read_file(dir + "/" + sid + "_" + lay.blocks[b].label + ".bin");
        }
        RepairPlan sp = plan;
        std::vector<int> reads;
        auto produced = reconstruct(lay, sp, blocks, &reads);
        for (int b : failed) {
            std::string fname = dir + "/" + sid + "_" + lay.blocks[b].label + ".bin";
            write_file(fname, produced[b]->data(), produced[b]->size());
        }
    }
    std::cout << "repaired " << failed.size() << " block(s) per stripe ("
              << repair_mode_name(plan.mode) << ", " << plan.cost() << " reads)\n";
    return 0;
}

// ---- mttdl ---------------------------------------------------------------

int cmd_mttdl(const std::string& preset_arg, const std::string& scheme_arg,
              const std::string& config_path, bool profile_only, uint64_t seed) {
    auto pp = preset_by_label(preset_arg);
    if (!pp) throw UsageError("unknown preset: " + preset_arg);
    auto s = scheme_from_name(scheme_arg);
    if (!s) throw UsageError("unknown scheme: " + scheme_arg);
    StripeLayout lay = make_layout(*s, *pp, env_width());

    double lambda = 0.25;
    double bandwidth = 125e6;          // 1 Gbps in bytes/s
    double block_bytes = 64.0 * 1024 * 1024;
    double detection = 30.0;
    if (!config_path.empty()) {
        json cfg;
        try {
            cfg = json::parse(read_file(config_path));
            lambda = cfg.value("lambdaPerNode", lambda);
            bandwidth = cfg.value("bandwidthBytesPerSec", bandwidth);
            block_bytes = cfg.value("blockSizeBytes", block_bytes);
            detection = cfg.value("detectionDelaySec", detection);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad config: ") + e.what());
        }
    }

    SurvivalProfile prof = survival_profile(lay, seed);
    if (profile_only) {
        for (size_t f = 1; f < prof.p.size(); ++f)
            std::cout << "p_" << f << " = " << prof.p[f]
                      << (prof.sampled[f] ? " (sampled)" : "") << "\n";
        return 0;
    }
    ReliabilityParams params;
    params.lambda_per_node = lambda;
    params.mu = derive_mu(lay, bandwidth, block_bytes, detection,
                          lay.r() + lay.p(), seed);
    MttdlResult res = mttdl(lay, params, prof);
    std::cout << "MTTDL(" << scheme_name(*s) << ", " << pp->label
              << ") = " << res.years << " years\n";
    for (size_t f = 1; f < prof.p.size(); ++f)
        std::cout << "p_" << f << " = " << prof.p[f]
                  << (prof.sampled[f] ? " (sampled)" : "") << "\n";
    return 0;
}

// ---- simulate ------------------------------------------------------------

int cmd_simulate(const std::string& preset_arg, const std::string& schemes_arg,
                 int nfiles, long long block_size, const std::string& patterns_arg,
                 uint64_t seed) {
    auto pp = preset_by_label(preset_arg);
    if (!pp) throw UsageError("unknown preset: " + preset_arg);
    auto schemes = parse_schemes(schemes_arg);
    StripeLayout lay = make_layout(schemes.front(), *pp, env_width());

    std::vector<std::vector<int>> patterns;
    {
        std::stringstream ss(patterns_arg);
        std::string pat;
        while (std::getline(ss, pat, ';')) {
            std::vector<int> nodes;
            for (const std::string& tok : split_list(pat)) nodes.push_back(std::stoi(tok));
            if (!nodes.empty()) patterns.push_back(nodes);
        }
    }
    StripeStore store(lay, block_size, seed);
    if (nfiles > 0) store.pack_files(synth_workload(nfiles, seed));

    std::cout << "scheme,pattern,bytesRead,blocksAccessed,undecodable\n";
    if (nfiles == 0 && patterns.empty()) return 0;
    for (Scheme sch : schemes) {
        for (const auto& pat : patterns) {
            auto res = store.run_repair_campaign({pat}, {sch});
            const IoAccounting& acc = res.begin()->second;
            std::string label;
            for (size_t i = 0; i < pat.size(); ++i)
                label += (i ? "|" : "") + std::to_string(pat[i]);
            std::cout << scheme_name(sch) << "," << label << "," << acc.bytes_read
                      << "," << acc.blocks_accessed << "," << acc.undecodable
                      << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cascaded-parity LRC toolkit"};
    app.require_subcommand(1);

    std::string presets = "all", schemes = "all", format = "table";
    bool dump_layout = false;
    auto* analyze = app.add_subcommand("analyze", "repair-cost metric tables");
    analyze->add_option("--presets", presets, "P1..P8 list or 'all'");
    analyze->add_option("--schemes", schemes, "scheme list or 'all'");
    analyze->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));
    analyze->add_flag("--dump-layout", dump_layout);

    std::string scheme_arg = "cp-azure", preset_arg, input, out_dir = ".";
    int k = 0, r = 0, p = 0;
    long long block_size = 4096;
    bool enc_dump = false;
    auto* enc = app.add_subcommand("encode", "encode a file into stripe blocks");
    enc->add_option("--scheme", scheme_arg);
    enc->add_option("--preset", preset_arg);
    enc->add_option("--k", k);
    enc->add_option("--r", r);
    enc->add_option("--p", p);
    enc->add_option("--input", input);
    enc->add_option("--out", out_dir);
    enc->add_option("--block-size", block_size);
    enc->add_flag("--dump-layout", enc_dump);

    std::string manifest_path, failed_arg;
    bool explain = false, rep_dump = false;
    auto* rep = app.add_subcommand("repair", "reconstruct failed blocks");
    rep->add_option("--manifest", manifest_path)->required();
    rep->add_option("--failed", failed_arg, "comma-separated block labels");
    rep->add_flag("--explain", explain, "print the JSON plan, do not execute");
    rep->add_flag("--dump-layout", rep_dump);

    std::string m_preset = "P1", m_scheme = "cp-azure", config_path;
    bool profile_only = false;
    uint64_t seed = 1;
    auto* mt = app.add_subcommand("mttdl", "Markov-chain reliability model");
    mt->add_option("--params,--preset", m_preset);
    mt->add_option("--scheme", m_scheme);
    mt->add_option("--config", config_path, "reliability JSON config");
    mt->add_flag("--profile-only", profile_only);
    mt->add_option("--seed", seed);

    std::string s_preset = "P1", s_schemes = "all", s_patterns;
    int nfiles = 0;
    long long s_block = 1 << 20;
    uint64_t s_seed = 1;
    auto* sim = app.add_subcommand("simulate", "repair campaign byte accounting");
    sim->add_option("--preset", s_preset);
    sim->add_option("--schemes", s_schemes);
    sim->add_option("--files", nfiles, "synthetic workload size");
    sim->add_option("--block-size", s_block);
    sim->add_option("--failures", s_patterns, "patterns like '0,1;2'");
    sim->add_option("--seed", s_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(presets, schemes, format, dump_layout);
        if (enc->parsed()) {
            StripeLayout lay = layout_from_flags(scheme_arg, preset_arg, k, r, p);
            if (!enc_dump && input.empty()) throw UsageError("encode needs --input");
            return cmd_encode(lay, input, out_dir, block_size, enc_dump);
        }
        if (rep->parsed()) return cmd_repair(manifest_path, failed_arg, explain, rep_dump);
        if (mt->parsed())
            return cmd_mttdl(m_preset, m_scheme, config_path, profile_only, seed);
        if (sim->parsed())
            return cmd_simulate(s_preset, s_schemes, nfiles, s_block, s_patterns, s_seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Undecodable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
