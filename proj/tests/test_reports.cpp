#include <doctest.h>

#include <string>

#include "pathwheel/formula.hpp"
#include "pathwheel/graph.hpp"
#include "pathwheel/lemmalab.hpp"
#include "pathwheel/report_json.hpp"
#include "pathwheel/search.hpp"
#include "pathwheel/witness.hpp"

using namespace pw;

TEST_CASE("breakdown serialization freezes every field") {
    CHECK(to_json(formula::ramsey_path_wheel(4, 9)).dump() ==
          R"({"value":11,"regime":"large-wheel","alpha":"8/3","beta":3,"gamma":"9/4",)"
          R"("branch":"alpha-gt-gamma","s":2})");

    // Outside the large-wheel regime the rational fields stay at their
    // defaults; they are still emitted so the schema never shifts.
    CHECK(to_json(formula::ramsey_path_wheel(5, 4)).dump() ==
          R"({"value":9,"regime":"small-wheel","alpha":"0/1","beta":0,"gamma":"0/1",)"
          R"("branch":"not-applicable","s":0})");
}

TEST_CASE("witness partition and report serialize in declaration order") {
    CHECK(to_json(clique_partition(3, 7)).dump() ==
          R"({"n":3,"m":7,"t":9,"parts":[2,2,2,2]})");

    WitnessReport wr;
    wr.path_free = true;
    wr.wheel_free = false;
    wr.cross_checked = true;
    CHECK(to_json(wr).dump() ==
          R"({"path_free":true,"wheel_free":false,"cross_checked":true})");
}

TEST_CASE("lemma instances keep only the engaged fields") {
    lemmalab::LemmaInstance inst;
    inst.id = lemmalab::LemmaId::L2_2;
    inst.g = path_graph(3);
    inst.x = 0;
    inst.n = 2;
    CHECK(to_json(inst).dump() == R"({"id":"L2.2","graph":"Bg","x":0,"n":2,"m":0,"p":0,"q":0})");

    lemmalab::LemmaInstance multi;
    multi.id = lemmalab::LemmaId::L8;
    multi.g = empty_graph(6);
    multi.set_x1 = VertexSet{0, 1, 2};
    multi.set_x2 = VertexSet{2, 3, 4};
    multi.p = 2;
    multi.m = 3;
    Json j = to_json(multi);
    CHECK(j["set_x1"] == Json::array({0, 1, 2}));
    CHECK(j["set_x2"] == Json::array({2, 3, 4}));
    CHECK(!j.contains("x"));
    CHECK(!j.contains("y"));
    CHECK(!j.contains("set_x"));
    CHECK(!j.contains("g2"));
    CHECK(!j.contains("region"));
}

TEST_CASE("suite results serialize identically across runners and thread counts") {
    const auto corpus = lemmalab::Corpus::randomized(40, 5);
    const std::string one = to_json(lemmalab::run_suite(lemmalab::LemmaId::L3, corpus, {}, 1)).dump();
    const std::string four = to_json(lemmalab::run_suite(lemmalab::LemmaId::L3, corpus, {}, 4)).dump();
    const std::string ref = to_json(lemmalab::run_suite_reference(lemmalab::LemmaId::L3, corpus)).dump();
    CHECK(one == four);
    CHECK(one == ref);
    Json j = Json::parse(one);
    CHECK(j["corpus"]["kind"] == "randomized");
    CHECK(j["corpus"]["count"] == 40);
    CHECK(j["corpus"]["seed"] == 5);
    CHECK(j["violations"].is_array());

    const auto small = lemmalab::Corpus::exhaustive(4);
    CHECK(to_json(lemmalab::run_suite(lemmalab::LemmaId::L2_5, small, {}, 2)).dump() ==
          to_json(lemmalab::run_suite_reference(lemmalab::LemmaId::L2_5, small)).dump());
}

TEST_CASE("search reports pin the counterexample and drop timing") {
    search::SearchLimits serial;
    serial.threads = 1;
    search::SearchLimits wide;
    wide.threads = 4;

    Json bad = to_json(search::verify_upper_bound(3, 7, 8, serial));
    CHECK(bad["verified"] == false);
    CHECK(bad["counterexample"] == to_graph6(clique_union({2, 2, 2, 2})));
    CHECK(!bad.contains("elapsed"));
    CHECK(bad.dump() == to_json(search::verify_upper_bound(3, 7, 8, wide)).dump());

    Json good = to_json(search::verify_upper_bound(3, 7, 9, serial));
    CHECK(good["verified"] == true);
    CHECK(good["counterexample"].is_null());
}

TEST_CASE("confirm report serializes canonically") {
    CHECK(to_json(search::confirm_ramsey(3, 7)).dump() ==
          R"({"n":3,"m":7,"ramsey_value":9,"upper_verified":true,)"
          R"("witness":{"n":3,"m":7,"t":9,"parts":[2,2,2,2]},)"
          R"("witness_report":{"path_free":true,"wheel_free":true,"cross_checked":true},)"
          R"("graphs_enumerated":5})");
}
