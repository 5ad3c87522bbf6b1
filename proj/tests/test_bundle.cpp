#include <doctest.h>

#include <sstream>

#include "rwlab/bundle.hpp"
#include "rwlab/reduce_is.hpp"
#include "rwlab/reduce_wds.hpp"
#include "rwlab/sampling.hpp"

using namespace rwlab;
using nlohmann::json;

namespace {

CnfFormula tiny_formula() {
    CnfFormula f;
    f.k = 1;
    f.clauses.push_back({Literal{1, 2, true}});
    return f;
}

} // namespace

TEST_CASE("bundle JSON round trip is bit-exact") {
    for (ReductionBundle bundle :
         {build_is_instance(tiny_formula()), build_wds_instance(tiny_formula())}) {
        json j = bundle_to_json(bundle);
        ReductionBundle back = bundle_from_json(j);
        CHECK(back == bundle);
        // serialized again, the document is identical
        CHECK(bundle_to_json(back) == j);
    }
}

TEST_CASE("bundle JSON carries the documented fields") {
    ReductionBundle bundle = build_is_instance(tiny_formula());
    json j = bundle_to_json(bundle);
    CHECK(j.at("meta").at("construction") == "is");
    CHECK(j.at("meta").at("k") == 1);
    CHECK(j.at("meta").at("m") == 1);
    CHECK(j.at("meta").at("target") == 7);
    CHECK(j.at("meta").at("sense") == "max");
    CHECK(j.at("vertices").size() == 9);
    CHECK(j.at("order").size() == 9);
    CHECK(j.at("width_bound") == 6);
    CHECK(j.at("vertices")[0].at("label") == "b^0_0");
}

TEST_CASE("malformed bundles are rejected") {
    ReductionBundle bundle = build_is_instance(tiny_formula());
    json j = bundle_to_json(bundle);

    json no_meta = j;
    no_meta.erase("meta");
    CHECK_THROWS_AS(bundle_from_json(no_meta), InputError);

    json bad_sense = j;
    bad_sense["meta"]["sense"] = "upward";
    CHECK_THROWS_AS(bundle_from_json(bad_sense), InputError);

    json bad_order = j;
    bad_order["order"] = {0, 1};
    CHECK_THROWS_AS(bundle_from_json(bad_order), InputError);

    json bad_edge = j;
    bad_edge["edges"].push_back({0, 99});
    CHECK_THROWS_AS(bundle_from_json(bad_edge), InputError);
}

TEST_CASE("threshold direction follows the sense") {
    ReductionBundle is = build_is_instance(tiny_formula()); // max, target 7
    CHECK(meets_target(is, 7));
    CHECK(meets_target(is, 8));
    CHECK_FALSE(meets_target(is, 6));

    ReductionBundle wds = build_wds_instance(tiny_formula()); // min, target 6
    CHECK(meets_target(wds, 6));
    CHECK(meets_target(wds, 5));
    CHECK_FALSE(meets_target(wds, 7));
}

TEST_CASE("edge list text export") {
    WeightedGraph g;
    g.graph.add_vertex(VertexLabel::plain(0));
    g.graph.add_vertex(VertexLabel::plain(1));
    g.graph.add_vertex(VertexLabel::plain(2));
    g.graph.add_edge(0, 2);
    g.weights = {4, 1, 1};
    std::string text = to_edge_list_text(g);
    CHECK(text == "p edge 3 1\ne 1 3\nw 1 4\nw 2 1\nw 3 1\n");
}

TEST_CASE("width certificates verify on constructed bundles") {
    ReductionBundle bundle = build_is_instance(tiny_formula());
    CHECK(verify_width_certificate(bundle));
    bundle.width_bound = 0;
    CHECK_FALSE(verify_width_certificate(bundle));
}
