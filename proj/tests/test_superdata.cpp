#include <catch2/catch_amalgamated.hpp>

#include "wfree/datum_io.hpp"
#include "wfree/superdata.hpp"

using namespace wfree;

TEST_CASE("matrix realizations", "[superdata]") {
  for (int n = 2; n <= 4; ++n) {
    auto g = make_sl(n);
    REQUIRE(g->dim == n * n - 1);
    REQUIRE(g->h_dual == n);
  }
  for (int n = 1; n <= 3; ++n) {
    auto g = make_osp1(n);
    REQUIRE(g->dim == n * (2 * n + 1) + 2 * n);
    REQUIRE(g->h_dual == Rational(2 * n + 1, 2));
  }
}

TEST_CASE("datum documents round trip", "[superdata][json]") {
  for (const char* name : {"sl2-regular", "sl3-subregular", "osp1_2-regular", "osp1_4-regular"}) {
    INFO(name);
    auto pre = make_preset(name);
    const auto& g = *pre.grading.g;
    std::vector<int> fs;
    for (const auto& [a, x] : pre.grading.f) fs.push_back(a);
    auto j = datum_to_json(g, pre.grading.labels2, fs);
    auto doc = datum_from_json(nlohmann::json::parse(j.dump()));
    const auto& h = *doc.datum;
    CHECK(h.names == g.names);
    CHECK(h.parity == g.parity);
    CHECK(h.weight == g.weight);
    CHECK(h.br == g.br);
    CHECK(h.form == g.form);
    CHECK(h.h_dual == g.h_dual);
    CHECK(h.theta == g.theta);
    auto gr = doc.grading();
    CHECK(gr.deg2 == pre.grading.deg2);
    CHECK(gr.f == pre.grading.f);
    CHECK(datum_to_json(h, doc.labels2, doc.f_support) == j);
  }
}

TEST_CASE("datum documents are validated", "[superdata][json]") {
  auto base = datum_to_json(*make_sl(2));
  SECTION("broken Jacobi or invariance is rejected") {
    auto j = base;
    for (auto& t : j["structure_constants"])
      if (t[2] == "h1") t[3] = "2";
    CHECK_THROWS_AS(datum_from_json(j), InvalidDatum);
  }
  SECTION("unknown names") {
    auto j = base;
    j["simple_roots"] = {"e99"};
    CHECK_THROWS_AS(datum_from_json(j), InvalidDatum);
  }
  SECTION("bad rational") {
    auto j = base;
    j["form"][0][2] = "x/y";
    CHECK_THROWS_AS(datum_from_json(j), InvalidDatum);
  }
  SECTION("missing key") {
    auto j = base;
    j.erase("form");
    CHECK_THROWS_AS(datum_from_json(j), InvalidDatum);
  }
  SECTION("grading from labels") {
    auto j = base;
    j["grading_labels"] = {0};
    j["f_support"] = {"e21"};
    auto doc = datum_from_json(j);
    CHECK_THROWS_AS(doc.grading(), NotGoodGrading);
  }
}
