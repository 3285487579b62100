#include <random>

#include "doctest.h"
#include "kpn/errors.hpp"
#include "kpn/json_io.hpp"

using namespace kpn;
using nlohmann::json;

TEST_CASE("base complex round trip") {
    auto K = boundary_of_simplex(3);
    auto j = emit_base_complex(K);
    auto K2 = parse_base_complex(j);
    CHECK(K2.vertex_count() == K.vertex_count());
    CHECK(K2.dim() == K.dim());
    for (int d = 0; d <= K.dim(); ++d) {
        REQUIRE(K2.count(d) == K.count(d));
        for (int id = 0; id < K.count(d); ++id) CHECK(K2.simplex(d, id) == K.simplex(d, id));
    }
    // emit is stable under the round trip
    CHECK(emit_base_complex(K2) == j);
}

TEST_CASE("base complex format errors name the entry") {
    json bad = {{"vertices", 3}, {"simplices", json::array({json::array({0, 1}),
                                                            json::array({2, 1})})}};
    try {
        parse_base_complex(bad);
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("#1") != std::string::npos);
    }
    json oob = {{"vertices", 2}, {"simplices", json::array({json::array({0, 5})})}};
    CHECK_THROWS_AS(parse_base_complex(oob), FormatError);
    json empty = {{"vertices", 2}, {"simplices", json::array({json::array()})}};
    CHECK_THROWS_AS(parse_base_complex(empty), FormatError);
}

TEST_CASE("cochain round trip") {
    auto K = boundary_of_simplex(3);
    std::mt19937 rng(3);
    for (long long mod : {0, 2, 5}) {
        CoeffGroup g = mod ? CoeffGroup::mod(mod) : CoeffGroup::integers();
        BaseCochain c(2, g);
        for (int id = 0; id < K.count(2); ++id)
            c.set(id, static_cast<long long>(rng() % 7) - 3);
        auto j = emit_cochain(c, K);
        auto c2 = parse_cochain(j, K);
        CHECK(c2 == c);
        CHECK(emit_cochain(c2, K) == j);
    }
}

TEST_CASE("cochain format errors") {
    auto K = boundary_of_simplex(3);
    json bad_dim = {{"degree", 2}, {"modulus", 2},
                    {"values", json::array({json::array({json::array({0, 1}), 1})})}};
    CHECK_THROWS_AS(parse_cochain(bad_dim, K), FormatError);
    json missing = {{"degree", 2}, {"modulus", 2},
                    {"values", json::array({json::array({json::array({0, 1, 9}), 1})})}};
    CHECK_THROWS_AS(parse_cochain(missing, K), FormatError);
}

TEST_CASE("report round trip") {
    Report r;
    r.job = {{"command", "em-homology"}, {"pi", "Z/2"}};
    r.groups.push_back({0, 1, {}});
    r.groups.push_back({1, 0, {2}});
    r.normalized_ranks = {1, 1, 5};
    r.cocycle_is_coboundary = false;
    CheckResult c;
    c.name = "twisting";
    c.pass = true;
    c.cases = 11;
    c.seconds = 0.25;
    r.checks.push_back(c);
    r.total_seconds = 1.5;
    auto j = emit_report(r);
    auto r2 = parse_report(j);
    CHECK(r2 == r);
    CHECK(emit_report(r2) == j);
}
