#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cascade_ec/codec.hpp"
#include "cascade_ec/metrics.hpp"
#include "cascade_ec/presets.hpp"
#include "cascade_ec/reliability.hpp"
#include "cascade_ec/simstore.hpp"

namespace py = pybind11;
using namespace cascade_ec;

namespace {

StripeLayout make_layout(const std::string& scheme, int k, int r, int p, int w) {
    auto sch = scheme_from_name(scheme);
    if (!sch) throw py::value_error("unknown scheme: " + scheme);
    return build_layout({*sch, k, r, p, w});
}

BlockBuffer to_buffer(const py::bytes& b) {
    std::string_view v = b;
    return BlockBuffer(v.begin(), v.end());
}

py::bytes to_bytes(const BlockBuffer& b) {
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

py::dict plan_to_dict(const RepairPlan& plan) {
    py::dict d;
    d["mode"] = repair_mode_name(plan.mode);
    d["cost"] = plan.cost();
    d["accessed"] = plan.accessed;
    py::list steps;
    for (const RepairStep& st : plan.steps) {
        py::dict sd;
        sd["target"] = st.target;
        sd["sources"] = st.sources;
        if (!st.coeffs.empty()) sd["coeffs"] = st.coeffs;
        steps.append(sd);
    }
    d["steps"] = steps;
    return d;
}

}  // namespace

PYBIND11_MODULE(_cascade_ec, m) {
    m.doc() = "cascaded-parity LRC core";

    py::register_exception<Undecodable>(m, "Undecodable");
    py::register_exception<InvalidSpec>(m, "InvalidSpec");

    py::class_<StripeLayout>(m, "Layout")
        .def(py::init(&make_layout), py::arg("scheme"), py::arg("k"),
             py::arg("r"), py::arg("p"), py::arg("w") = 8)
        .def_property_readonly("scheme",
                               [](const StripeLayout& l) {
                                   return std::string(scheme_name(l.spec.scheme));
                               })
        .def_property_readonly("k", &StripeLayout::k)
        .def_property_readonly("r", &StripeLayout::r)
        .def_property_readonly("p", &StripeLayout::p)
        .def_property_readonly("n", &StripeLayout::n)
        .def_property_readonly("w",
                               [](const StripeLayout& l) { return l.spec.w; })
        .def_property_readonly("labels",
                               [](const StripeLayout& l) {
                                   std::vector<std::string> out;
                                   for (const BlockId& b : l.blocks)
                                       out.push_back(b.label);
                                   return out;
                               })
        .def_property_readonly("groups",
                               [](const StripeLayout& l) {
                                   py::list out;
                                   for (const Group& g : l.groups) {
                                       py::dict d;
                                       d["members"] = g.members;
                                       d["parity"] = g.parity;
                                       out.append(d);
                                   }
                                   return out;
                               })
        .def_property_readonly("generator",
                               [](const StripeLayout& l) {
                                   std::vector<std::vector<int>> rows(l.n());
                                   for (int b = 0; b < l.n(); ++b)
                                       for (int c = 0; c < l.k(); ++c)
                                           rows[b].push_back(l.generator.at(b, c));
                                   return rows;
                               })
        .def("group_of", &StripeLayout::group_of, py::arg("block"))
        .def("__repr__", [](const StripeLayout& l) {
            return "<Layout " + std::string(scheme_name(l.spec.scheme)) + " (" +
                   std::to_string(l.k()) + "," + std::to_string(l.r()) + "," +
                   std::to_string(l.p()) + ") w=" + std::to_string(l.spec.w) +
                   ">";
        });

    m.def("verify_cascade", &verify_cascade, py::arg("layout"));

    m.def(
        "encode",
        [](const StripeLayout& lay, const std::vector<py::bytes>& data) {
            std::vector<BlockBuffer> bufs;
            for (const py::bytes& b : data) bufs.push_back(to_buffer(b));
            std::vector<py::bytes> out;
            for (const BlockBuffer& b : encode(lay, bufs)) out.push_back(to_bytes(b));
            return out;
        },
        py::arg("layout"), py::arg("data"),
        "Encode k data buffers into the full n-block stripe.");

    m.def(
        "plan_repair",
        [](const StripeLayout& lay, const std::vector<int>& failed, bool resolve) {
            RepairPlan plan = plan_multi(lay, failed);
            if (resolve) resolve_coefficients(lay, plan);
            return plan_to_dict(plan);
        },
        py::arg("layout"), py::arg("failed"), py::arg("resolve") = false,
        "Repair plan for a set of failed block indices.");

    m.def(
        "reconstruct",
        [](const StripeLayout& lay, const std::vector<int>& failed,
           const std::vector<std::optional<py::bytes>>& blocks) {
            RepairPlan plan = plan_multi(lay, failed);
            std::vector<std::optional<BlockBuffer>> present(blocks.size());
            for (size_t i = 0; i < blocks.size(); ++i)
                if (blocks[i]) present[i] = to_buffer(*blocks[i]);
            auto produced = reconstruct(lay, plan, present);
            py::dict out;
            for (int b : failed) out[py::int_(b)] = to_bytes(*produced[b]);
            return out;
        },
        py::arg("layout"), py::arg("failed"), py::arg("blocks"),
        "Rebuild the failed blocks from a stripe with erasures.");

    m.def(
        "decode",
        [](const StripeLayout& lay,
           const std::vector<std::optional<py::bytes>>& blocks) {
            std::vector<std::optional<BlockBuffer>> present(blocks.size());
            for (size_t i = 0; i < blocks.size(); ++i)
                if (blocks[i]) present[i] = to_buffer(*blocks[i]);
            std::vector<py::bytes> out;
            for (const BlockBuffer& b : decode_full(lay, present))
                out.push_back(to_bytes(b));
            return out;
        },
        py::arg("layout"), py::arg("blocks"),
        "Recover the k data buffers from any k available blocks.");

    m.def("decodable", &decodable, py::arg("layout"), py::arg("failed"));

    m.def(
        "metrics",
        [](const StripeLayout& lay) {
            MetricReport r = compute_metrics(lay);
            py::dict d;
            d["adrc"] = r.adrc;
            d["arc1"] = r.arc1;
            d["arc2"] = r.arc2;
            d["localRepairPortion"] = r.local_repair_portion;
            d["effectiveLocalPortion"] = r.effective_local_portion;
            d["adrcNum"] = r.adrc_num;
            d["arc1Num"] = r.arc1_num;
            d["arc2Num"] = r.arc2_num;
            return d;
        },
        py::arg("layout"),
        "ADRC/ARC1/ARC2 and repair portions by exhaustive enumeration.");

    m.def(
        "survival_profile",
        [](const StripeLayout& lay, uint64_t seed, long long exhaustive_limit,
           int samples) {
            return survival_profile(lay, seed, exhaustive_limit, samples).p;
        },
        py::arg("layout"), py::arg("seed") = 1,
        py::arg("exhaustive_limit") = 1000000, py::arg("samples") = 100000,
        "p[f]: fraction of f-failure patterns that lose data.");

    m.def(
        "mttdl",
        [](const StripeLayout& lay, double lambda_per_node,
           double bandwidth_bytes_s, double block_bytes,
           double detection_delay_s, uint64_t seed) {
            SurvivalProfile prof = survival_profile(lay, seed);
            ReliabilityParams params;
            params.lambda_per_node = lambda_per_node;
            params.mu = derive_mu(lay, bandwidth_bytes_s, block_bytes,
                                  detection_delay_s, lay.r() + lay.p(), seed);
            MttdlResult res = mttdl(lay, params, prof);
            py::dict d;
            d["years"] = res.years;
            d["p"] = res.p;
            d["mu"] = res.mu;
            return d;
        },
        py::arg("layout"), py::arg("lambda_per_node") = 0.25,
        py::arg("bandwidth_bytes_s") = 125e6,
        py::arg("block_bytes") = 64.0 * 1024 * 1024,
        py::arg("detection_delay_s") = 30.0, py::arg("seed") = 1,
        "Mean time to data loss of the birth-death failure chain, in years.");

    py::list presets;
    for (const ParamPreset& p : kPresets) {
        py::dict d;
        d["label"] = p.label;
        d["k"] = p.k;
        d["r"] = p.r;
        d["p"] = p.p;
        presets.append(d);
    }
    m.attr("PRESETS") = presets;
}
