#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sumset/json_io.hpp"
#include "test_support.hpp"

using namespace sumset;

TEST_CASE("rationals serialize as bare integers or p/q strings") {
    CHECK(to_json(Rat(5)) == json(5));
    CHECK(to_json(Rat(-3, 2)) == json("-3/2"));
    CHECK(rat_from_json(json(7), "x") == Rat(7));
    CHECK(rat_from_json(json("7"), "x") == Rat(7));
    CHECK(rat_from_json(json("-10/4"), "x") == Rat(-5, 2));
    CHECK_THROWS_AS(rat_from_json(json(1.5), "x"), BadInput);
    CHECK_THROWS_AS(rat_from_json(json("a/b"), "x"), BadInput);
}

TEST_CASE("huge numerators survive the string form") {
    const Rat big(mpz_class("123456789012345678901234567890"), mpz_class(1));
    const json j = to_json(big);
    CHECK(j.is_string());
    CHECK(rat_from_json(j, "x") == big);
}

TEST_CASE("rational round-trip property") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const Rat r = testsup::random_rat(rng, 100, 60);
        CHECK(rat_from_json(to_json(r), "x") == r);
        CHECK(Rat::parse(r.str()) == r);
    }
}

TEST_CASE("instance round-trip is canonical") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int t = static_cast<int>(rng() % static_cast<unsigned>(n));
        const Instance inst = testsup::random_covered_instance(rng, n, t);
        const json j = to_json(inst);
        const Instance back = instance_from_json(j);
        CHECK(back.n == inst.n);
        CHECK(back.t == inst.t);
        CHECK(back.basis == inst.basis);
        CHECK(back.a == inst.a);
        CHECK(back.b == inst.b);
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("instance parsing names the offending field") {
    const auto message_of = [](const json& j) {
        try {
            instance_from_json(j);
            return std::string();
        } catch (const BadInput& e) {
            return std::string(e.what());
        }
    };

    json missing = json{{"n", 2}, {"t", 0}, {"A", json::array()}, {"B", json::array()}};
    CHECK(message_of(missing).find("'S'") != std::string::npos);

    json bad_rat = to_json(extremal_construction(2, 1));
    bad_rat["A"][0][0] = "x/y";
    CHECK(message_of(bad_rat).find("A[0]") != std::string::npos);

    json bad_dim = to_json(extremal_construction(2, 1));
    bad_dim["B"].push_back(json::array({1, 2, 3}));
    CHECK(message_of(bad_dim).find("'B'") != std::string::npos);

    CHECK_THROWS_AS(instance_from_json(json::array()), BadInput);
    CHECK_THROWS_AS(parse_document("{not json"), BadInput);
}

TEST_CASE("certificate JSON carries every audit field") {
    const Certificate cert = certify(extremal_construction(3, 1));
    const json j = to_json(cert);
    for (const char* key :
         {"n", "t", "p", "q", "vH", "sizeA", "sizeB", "colorsX", "colorsC", "folded", "lemma",
          "lemma_bound_value", "final_bound", "step_flags", "proved"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["proved"] == true);
    CHECK(j["step_flags"].size() == 8);
    CHECK(j["folded"]["Xp"].is_array());
    CHECK(j["lemma"]["pass"] == true);

    // n=1 has no folding stage.
    Instance one;
    one.n = 1;
    one.t = 0;
    one.basis = {RatVec::unit(1, 1)};
    one.a = {RatVec::unit(1, 1)};
    one.b = {RatVec::unit(1, 1)};
    const json j1 = to_json(certify(one));
    CHECK(j1["folded"].is_null());
    CHECK(j1["lemma"].is_null());
}

TEST_CASE("F2Vec and color sets serialize sorted") {
    const Certificate cert = certify(extremal_construction(2, 1));
    const json j = to_json(cert);
    CHECK(j["folded"]["Xp"] == json::array({"00"}));
    CHECK(j["folded"]["Cp"] == json::array({"00", "11"}));
    CHECK(j["colorsX"] == json::array({json::array({1, 0})}));
}

TEST_CASE("search result JSON uses the objective key") {
    const Universe u{.n = 2, .lo = -1, .hi = 2, .denom = 1};
    const json j = search_result_to_json(min_B_search(2, 1, u), "minB");
    CHECK(j["minB"] == 3);
    CHECK(j["feasible"] == true);
    CHECK(j.contains("nodesExplored"));
    CHECK(j["witnessB"].size() == 3);
}
