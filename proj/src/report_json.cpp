#include "pathwheel/report_json.hpp"

#include <string>

namespace pw {

namespace {

std::string rational_str(const Rational& r) {
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

Json json_vertex_set(const VertexSet& s) {
    Json a = Json::array();
    for (int v : s) a.push_back(v);
    return a;
}

Json json_corpus(const lemmalab::Corpus& c) {
    Json j;
    if (c.kind == lemmalab::Corpus::Kind::Exhaustive) {
        j["kind"] = "exhaustive";
        j["max_order"] = c.max_order;
    } else {
        j["kind"] = "randomized";
        j["count"] = c.count;
        j["seed"] = c.seed;
    }
    return j;
}

} // namespace

Json to_json(const formula::RamseyBreakdown& b) {
    Json j;
    j["value"] = b.value;
    j["regime"] = formula::to_string(b.regime);
    j["alpha"] = rational_str(b.alpha);
    j["beta"] = b.beta;
    j["gamma"] = rational_str(b.gamma);
    j["branch"] = formula::to_string(b.branch);
    j["s"] = b.s;
    return j;
}

Json to_json(const CliquePartition& p) {
    Json j;
    j["n"] = p.n;
    j["m"] = p.m;
    j["t"] = p.t;
    j["parts"] = p.parts;
    return j;
}

Json to_json(const WitnessReport& r) {
    Json j;
    j["path_free"] = r.path_free;
    j["wheel_free"] = r.wheel_free;
    j["cross_checked"] = r.cross_checked;
    return j;
}

Json to_json(const lemmalab::LemmaInstance& inst) {
    Json j;
    j["id"] = lemmalab::to_string(inst.id);
    j["graph"] = to_graph6(inst.g);
    if (inst.x) j["x"] = *inst.x;
    if (inst.y) j["y"] = *inst.y;
    if (inst.set_x) j["set_x"] = json_vertex_set(*inst.set_x);
    if (inst.set_x1) j["set_x1"] = json_vertex_set(*inst.set_x1);
    if (inst.set_x2) j["set_x2"] = json_vertex_set(*inst.set_x2);
    if (inst.g2) j["g2"] = to_graph6(*inst.g2);
    if (inst.region) j["region"] = json_vertex_set(*inst.region);
    j["n"] = inst.n;
    j["m"] = inst.m;
    j["p"] = inst.p;
    j["q"] = inst.q;
    return j;
}

Json to_json(const lemmalab::SuiteResult& r) {
    Json j;
    j["id"] = lemmalab::to_string(r.id);
    j["corpus"] = json_corpus(r.corpus);
    j["instances_checked"] = r.instances_checked;
    j["hypothesis_held"] = r.hypothesis_held;
    j["starved"] = r.starved;
    j["resource_errors"] = r.resource_errors;
    Json v = Json::array();
    for (const lemmalab::LemmaInstance& inst : r.violations) v.push_back(to_json(inst));
    j["violations"] = std::move(v);
    return j;
}

Json to_json(const search::SearchReport& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["t"] = r.t;
    j["verified"] = r.verified;
    j["graphs_enumerated"] = r.graphs_enumerated;
    j["counterexample"] = r.counterexample ? Json(to_graph6(*r.counterexample)) : Json(nullptr);
    return j;
}

Json to_json(const search::ConfirmReport& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["ramsey_value"] = r.ramsey_value;
    j["upper_verified"] = r.upper_verified;
    j["witness"] = to_json(r.witness);
    j["witness_report"] = to_json(r.witness_report);
    j["graphs_enumerated"] = r.graphs_enumerated;
    return j;
}

} // namespace pw
