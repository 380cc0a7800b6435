#include "helly/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace helly {

namespace {

Json faces_to_json(const std::vector<Mask>& faces) {
    Json out = Json::array();
    for (Mask f : faces) out.push_back(mask_to_verts(f));
    return out;
}

std::vector<std::vector<int>> faces_from_json(const Json& j) {
    std::vector<std::vector<int>> out;
    for (const auto& f : j) out.push_back(f.get<std::vector<int>>());
    return out;
}

Json rats_to_json(const std::vector<Rat>& xs) {
    Json out = Json::array();
    for (const Rat& x : xs) out.push_back(rat_to_string(x));
    return out;
}

std::vector<Rat> rats_from_json(const Json& j) {
    std::vector<Rat> out;
    for (const auto& x : j) out.push_back(rat_from_string(x.get<std::string>()));
    return out;
}

}  // namespace

Json complex_to_json(const Complex& k) {
    return Json{{"n", k.vertex_count()}, {"maximal_faces", faces_to_json(k.maximal_faces())}};
}

Complex complex_from_json(const Json& j) {
    return Complex::from_maximal_faces(j.at("n").get<int>(),
                                       faces_from_json(j.at("maximal_faces")));
}

Json hypergraph_to_json(const Hypergraph& h) {
    return Json{{"n", h.vertex_count()}, {"arity", h.arity()}, {"edges", faces_to_json(h.edges())}};
}

Hypergraph hypergraph_from_json(const Json& j) {
    return Hypergraph::from_edge_lists(j.at("n").get<int>(), j.at("arity").get<int>(),
                                       faces_from_json(j.at("edges")));
}

Json fvector_to_json(const FVector& fv) {
    return Json{{"counts", fv.counts}, {"dim", fv.dim}};
}

Json betti_to_json(const BettiProfile& profile) { return Json{{"betti", profile.betti}}; }

Json leray_to_json(const LerayCertificate& cert) {
    Json j{{"d", cert.d}, {"subsets_checked", cert.subsets_checked}};
    switch (cert.verdict) {
        case LerayCertificate::Verdict::certified: j["verdict"] = "certified"; break;
        case LerayCertificate::Verdict::refuted: j["verdict"] = "refuted"; break;
        case LerayCertificate::Verdict::not_falsified: j["verdict"] = "not_falsified"; break;
    }
    if (cert.counterexample)
        j["counterexample"] = Json{{"subset", cert.counterexample->first},
                                   {"dimension", cert.counterexample->second}};
    return j;
}

Json constraint_to_json(const LinearConstraint& c) {
    return Json{{"normal", rats_to_json(c.normal)},
                {"offset", rat_to_string(c.offset)},
                {"rel", c.rel == Rel::le ? "le" : "eq"}};
}

LinearConstraint constraint_from_json(const Json& j) {
    LinearConstraint c;
    c.normal = rats_from_json(j.at("normal"));
    c.offset = rat_from_string(j.at("offset").get<std::string>());
    const std::string rel = j.at("rel").get<std::string>();
    if (rel == "le")
        c.rel = Rel::le;
    else if (rel == "eq")
        c.rel = Rel::eq;
    else
        throw std::invalid_argument("constraint: rel must be 'le' or 'eq'");
    return c;
}

Json polyhedron_to_json(const HPolyhedron& h) {
    Json cons = Json::array();
    for (const auto& c : h.constraints) cons.push_back(constraint_to_json(c));
    return Json{{"dim", h.dim}, {"constraints", cons}};
}

HPolyhedron polyhedron_from_json(const Json& j) {
    HPolyhedron h;
    h.dim = j.at("dim").get<int>();
    for (const auto& c : j.at("constraints")) {
        LinearConstraint parsed = constraint_from_json(c);
        if (static_cast<int>(parsed.normal.size()) != h.dim)
            throw std::invalid_argument("polyhedron: constraint dimension mismatch");
        h.constraints.push_back(std::move(parsed));
    }
    return h;
}

Json product_body_to_json(const ProductBody& b) {
    Json parts = Json::array();
    for (const auto& c : b.components) parts.push_back(polyhedron_to_json(c));
    return Json{{"components", parts}};
}

ProductBody product_body_from_json(const Json& j) {
    ProductBody b;
    for (const auto& c : j.at("components")) b.components.push_back(polyhedron_from_json(c));
    return b;
}

Json slab_family_to_json(const SlabFamily& family) {
    Json sets = Json::array();
    std::size_t max_bits = 0;
    for (const auto& s : family.sets) {
        sets.push_back(polyhedron_to_json(s));
        for (const auto& c : s.constraints) {
            for (const Rat& v : c.normal) max_bits = std::max(max_bits, rat_bit_size(v));
            max_bits = std::max(max_bits, rat_bit_size(c.offset));
        }
    }
    Json normals = Json::array();
    for (const auto& u : family.normals) normals.push_back(rats_to_json(u));
    return Json{{"n", family.n},
                {"d", family.d},
                {"r", family.r},
                {"seed", family.seed},
                {"sets", sets},
                {"normals", normals},
                {"thicknesses", rats_to_json(family.thicknesses)},
                {"max_coefficient_bits", max_bits}};
}

Json condition_report_to_json(const ConditionReport& report) {
    auto item = [](const ConditionReport::Item& it) {
        Json j{{"pass", it.pass}};
        if (!it.pass) j["detail"] = it.detail;
        return j;
    };
    return Json{{"independence", item(report.independence)},
                {"compactness", item(report.compactness)},
                {"tuples", item(report.tuples)},
                {"ordering", item(report.ordering)},
                {"all_pass", report.all_pass()}};
}

Json block_partition_to_json(const BlockPartition& partition) {
    return Json{{"n", partition.n},
                {"t", partition.t},
                {"r", partition.r},
                {"d", partition.d},
                {"blocks", partition.blocks}};
}

Json plan_to_json(const ProductFamilyPlan& plan) {
    Json spans = Json::array();
    for (auto [b, e] : plan.group_spans) spans.push_back(Json::array({b, e}));
    return Json{{"n", plan.n},          {"t", plan.t},
                {"d", plan.d},          {"r", plan.r},
                {"group_sizes", plan.group_sizes}, {"group_ranks", plan.group_ranks},
                {"group_spans", spans}};
}

Json product_stats_to_json(const ProductFamilyStats& stats) {
    Json j{{"edges", stats.edges.get_str()},
           {"expected_edges", stats.expected_edges.get_str()},
           {"max_clique", stats.max_clique},
           {"expected_clique", stats.expected_clique},
           {"clique_witness", stats.clique_witness},
           {"p_bound", rat_to_string(stats.p_bound)},
           {"zero_rank_group", stats.has_zero_rank_group}};
    if (stats.p_cond)
        j["p_condition"] = *stats.p_cond;
    else
        j["p_condition"] = nullptr;
    return j;
}

}  // namespace helly
