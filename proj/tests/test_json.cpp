#include "doctest.h"
#include "ribbonschur/json_io.hpp"

using namespace ribbonschur;
using nlohmann::json;

TEST_CASE("expansion payload schema") {
    json doc = to_json(schur_expansion(Ribbon::from_pair(Partition({2, 2}), {1, 0})));
    CHECK(doc.at("interval").at("bottom") == "2,2");
    CHECK(doc.at("interval").at("top") == "3,1");
    CHECK(doc.at("full_support") == true);
    REQUIRE(doc.at("coefficients").size() == 2);
    CHECK(doc.at("coefficients")[0].at("nu") == "3,1");  // largest-first order
    CHECK(doc.at("coefficients")[0].at("c") == 1);
    CHECK(doc.at("coefficients")[1].at("nu") == "2,2");
    CHECK(json::parse(doc.dump()) == doc);
}

TEST_CASE("witness payload schema") {
    json doc = to_json(witness_report(Partition({7, 6, 6, 2, 2, 2, 2}), {6, 5, 4, 3, 2, 1, 0}));
    CHECK(doc.at("full_support") == false);
    CHECK(doc.at("certificate") == "7,6,6,6,2");
    const json& w3 = doc.at("witnesses")[2];
    CHECK(w3.at("i") == 3);
    CHECK(w3.at("rho") == 6);
    CHECK(w3.at("g") == json::array({0, 0, 0}));
    CHECK(w3.at("slack") == 2);
    CHECK(w3.at("fits") == true);

    json full = to_json(witness_report(Partition({4, 3, 2, 2}), {3, 2, 1, 0}));
    CHECK(full.at("full_support") == true);
    CHECK_FALSE(full.contains("certificate"));
}

TEST_CASE("support payload schema") {
    json doc = support_json(Partition({4, 2, 2}), {2, 1, 0});
    CHECK(doc.at("full_support") == false);
    CHECK(doc.at("excluded") == json::array({"4,4"}));
    CHECK(doc.at("interval").at("top") == "6,2");
    CHECK(doc.at("support").size() + 1 == doc.at("support").size() + doc.at("excluded").size());
}

TEST_CASE("positivity payload with companion") {
    json doc = positivity_json(Partition({3, 3, 3}), {1, 0, 0}, Partition({8, 1}), true);
    CHECK(doc.at("positive") == true);
    CHECK(doc.at("companion").at("text") == "1 1 1 2 2 3 3 3 / 2");
    CHECK(doc.at("filling").at("rows").size() == 3);

    json zero = positivity_json(Partition({3, 3, 3}), {2, 1, 0}, Partition({8, 1}), true);
    CHECK(zero.at("positive") == false);
    CHECK_FALSE(zero.contains("companion"));
}

TEST_CASE("equivalence payload schema") {
    EquivalenceReport report = ghs_necessary(Partition({4, 3, 2, 2}));
    report.brute_force = true;
    json doc = to_json(report, Partition({4, 3, 2, 2}));
    CHECK(doc.at("alpha") == "4,3,2,2");
    CHECK(doc.at("ghs_necessary") == true);
    CHECK(doc.at("strict_triangle") == false);
    CHECK(doc.at("brute_force") == true);
    CHECK(doc.at("entries")[0].at("N") == 5);
    CHECK(doc.at("entries")[0].at("rho") == 6);
}

TEST_CASE("tableau payload") {
    json doc = to_json(parse_tableau("1 1 2 / 2 3"));
    CHECK(doc.at("rows") == json::array({json::array({1, 1, 2}), json::array({2, 3})}));
    CHECK(doc.at("text") == "1 1 2 / 2 3");
}
