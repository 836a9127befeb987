#include <doctest.h>

#include <random>

#include "spcob/checks.hpp"
#include "spcob/json_io.hpp"

using namespace spcob;

TEST_CASE("partitions serialize as arrays") {
  CHECK(to_json(Partition{3, 1}).dump() == "[3,1]");
  CHECK(to_json(Partition{}).dump() == "[]");
  CHECK(partition_from_json(Json::parse("[2,2,0]")) == Partition{2, 2});
  CHECK_THROWS_AS(partition_from_json(Json::parse("{}")), DomainError);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), DomainError);
}

TEST_CASE("e-polynomial format") {
  const EPoly p = EPoly::generator(3, 1) * EPoly::generator(3, 2) - EPoly::generator(3, 3);
  const Json j = to_json(p);
  CHECK(j["basis"] == "e");
  CHECK(j["r"] == 3);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff"].is_string());
  CHECK(epoly_from_json(j) == p);
  CHECK(j.dump() == to_json(epoly_from_json(j)).dump());
}

TEST_CASE("coefficients beyond 64 bits round-trip") {
  const Integer huge("123456789012345678901234567890");
  const XPoly p = XPoly::generator(2, 1) * huge;
  const Json j = to_json(p);
  CHECK(j["terms"][0]["coeff"] == "123456789012345678901234567890");
  CHECK(sympoly_from_json(j).x == p);
  CHECK(coeff_from_json(Json(-7)) == -7);
  CHECK_THROWS_AS(coeff_from_json(Json("12a")), DomainError);
  CHECK_THROWS_AS(coeff_from_json(Json(1.5)), DomainError);
}

TEST_CASE("Schur vectors and ring elements") {
  SchurVector v(2);
  v.add_term(Partition{2, 1}, 3);
  v.add_term(Partition{}, -1);
  CHECK(schur_from_json(to_json(v)) == v);
  const GrassElem x(GrassRing(2, 4), v);
  const Json j = to_json(x);
  CHECK(j["ring"]["r"] == 2);
  CHECK(j["ring"]["n"] == 4);
  CHECK(grass_elem_from_json(j) == x);
  Json bad = j;
  bad["ring"]["n"] = 3;
  CHECK_THROWS_AS(grass_elem_from_json(bad), DomainError);
}

TEST_CASE("malformed polynomial JSON") {
  CHECK_THROWS_AS(sympoly_from_json(Json::parse(R"({"basis":"q","r":1,"terms":[]})")), DomainError);
  CHECK_THROWS_AS(sympoly_from_json(Json::parse(R"({"basis":"e","r":2,"terms":[{"key":[1],"coeff":"1"}]})")),
                  DomainError);
  CHECK_THROWS_AS(sympoly_from_json(Json::parse(R"({"basis":"e","terms":[]})")), DomainError);
  CHECK_THROWS_AS(sympoly_from_json(Json::parse(R"({"basis":"schur","r":1,"terms":[{"key":[1,1],"coeff":"1"}]})")),
                  DomainError);
  CHECK_THROWS_AS(epoly_from_json(to_json(XPoly::one(1))), DomainError);
}

TEST_CASE("series and named polynomials") {
  const HomSeries x = HomSeries::p(2, 1, 5) * HomSeries::p(2, 2, 5) + HomSeries::one(2, 5);
  CHECK(homseries_from_json(to_json(x)) == x);
  const HomSeries split = coproduct_generator(2, 2, 1, 4);
  const Json sj = to_json(split);
  CHECK(sj.contains("weights"));
  CHECK(homseries_from_json(sj) == split);

  const NamedPoly n = NamedPoly::symbol({"x1", 1}) * NamedPoly::symbol({"zeta", 1}) - NamedPoly::symbol({"p2(F)", 2});
  const Json nj = to_json(n);
  CHECK(nj["basis"] == "named");
  CHECK(named_from_json(nj) == n);
  CHECK(nj["text"].is_string());
}

TEST_CASE("matrices") {
  const TMatrix m = paper_homotopy_matrix();
  const Json j = to_json(m);
  CHECK(j["size"] == 4);
  CHECK(j["entries"][0][2].dump() == "[0,-2,0,13,0,-14,0,4]");
  CHECK(tmatrix_from_json(j) == m);
  CHECK_THROWS_AS(tmatrix_from_json(Json::parse(R"({"size":3,"entries":[]})")), DomainError);
  CHECK_THROWS_AS(tmatrix_from_json(Json::parse(R"({"size":2,"entries":[[[1]]]})")), DomainError);
}

TEST_CASE("reports") {
  const Report ok = run_check("demo", {{"k", 1}}, [] {
    CheckOutcome o;
    o.stat("cases", 2);
    return o;
  });
  CHECK(ok.pass);
  const Json j = to_json(ok);
  CHECK(j["check"] == "demo");
  CHECK(j["witness"]["stats"]["cases"] == 2);
  CHECK(j.contains("elapsed_ms"));

  const Report bad = run_check("demo", Json::object(), [] {
    CheckOutcome o;
    o.fail("first");
    o.fail("second");
    return o;
  });
  CHECK_FALSE(bad.pass);
  CHECK(to_json(bad)["witness"]["failure"] == "first");

  const Report thrown = run_check("demo", Json::object(), []() -> CheckOutcome { throw DomainError("boom"); });
  CHECK_FALSE(thrown.pass);
  CHECK(to_json(thrown)["witness"]["failure"].get<std::string>().find("boom") != std::string::npos);
}

TEST_CASE("suite output is ordered by check name and deterministic apart from timing") {
  const SuiteLimits small{2, 4, 5};
  auto strip = [](std::vector<Report> rs) {
    Json out = Json::array();
    for (auto& r : rs) {
      r.elapsed_ms = 0;
      out.push_back(to_json(r));
    }
    return out;
  };
  const auto a = run_suite(small);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].check < a[i].check);
  for (const auto& r : a) CHECK_MESSAGE(r.pass, r.check);
  CHECK(strip(a) == strip(run_suite(small)));
}
