#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "ga/error.hpp"
#include "ga/serialize.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace ga;
using nlohmann::json;

TEST_CASE("multivector json shape") {
  AlgebraContext c(3);
  const auto x = Multivector::scalar(c, 1.5) + Multivector::blade(c, 5, -2.0);
  const json j = json::parse(to_json(x));
  CHECK(j["dim"] == 3);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["blades"] == json::array());
  CHECK(j["terms"][0]["coeff"] == 1.5);
  CHECK(j["terms"][1]["blades"] == json::array({1, 3}));
  CHECK(j["terms"][1]["coeff"] == -2.0);
}

TEST_CASE("round trips are exact") {
  oracle::Rng rng(71);
  for (int n = 1; n <= 5; ++n) {
    AlgebraContext c(n);
    const auto x = oracle::random_multivector(rng, c);
    CHECK(approx_equal(multivector_from_json(to_json(x)), x, 0.0, 0.0));
    const LinOp t(c, oracle::random_matrix(rng, n, n));
    CHECK(linop_from_json(to_json(t)).matrix() == t.matrix());
    const GeneralExtensor g(c, oracle::random_matrix(rng, c.blade_count(), c.blade_count()));
    CHECK(general_from_json(to_json(g)).matrix() == g.matrix());
    const auto m = MetricStructure::from_matrix(c, oracle::random_metric(rng, n, n / 2));
    CHECK(metric_from_json(c, to_json(m)).g().matrix() == m.g().matrix());
  }
}

TEST_CASE("pq and elementary encodings carry their degrees") {
  AlgebraContext c(3);
  const json pq = json::parse(to_json(PQExtensor::zero(c, 1, 2)));
  CHECK(pq["p"] == 1);
  CHECK(pq["q"] == 2);
  CHECK(pq["shape"] == json::array({3, 3}));
  const json el = json::parse(to_json(ElementaryKExtensor::zero(c, 2, 1)));
  CHECK(el["k"] == 2);
  CHECK(el["q"] == 1);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(multivector_from_json("{"), Error);
  CHECK_THROWS_AS(multivector_from_json(R"({"dim": 2, "terms": [{"blades": [3], "coeff": 1}]})"), Error);
  CHECK_THROWS_AS(multivector_from_json(R"({"dim": 2, "terms": [{"blades": [2, 1], "coeff": 1}]})"), Error);
  CHECK_THROWS_AS(multivector_from_json(R"({"dim": 0, "terms": []})"), Error);
  CHECK_THROWS_AS(linop_from_json(R"({"dim": 2, "kind": "general", "matrix": [1,0,0,1]})"), Error);
  CHECK_THROWS_AS(linop_from_json(R"({"dim": 2, "matrix": [1,0,0]})"), Error);
  AlgebraContext c(2);
  CHECK_THROWS_AS(metric_from_json(c, R"({"dim": 3, "matrix": [[1,0,0],[0,1,0],[0,0,1]]})"), Error);
  CHECK_THROWS_AS(metric_from_json(c, R"({"dim": 2, "matrix": [[1,"x"],[0,1]]})"), Error);
  CHECK_THROWS_AS(metric_from_json(c, R"({"dim": 2, "matrix": [[1,2],[0,1]]})"), Error);
}

TEST_CASE("metric specs") {
  AlgebraContext c(3);
  CHECK(metric_from_spec(c, "identity").q() == 0);
  const auto d = metric_from_spec(c, "diag:1,-1,2");
  CHECK(d.q() == 1);
  CHECK(d.det() == doctest::Approx(-2.0));
  CHECK_THROWS_AS(metric_from_spec(c, "diag:1,2"), Error);
  CHECK_THROWS_AS(metric_from_spec(c, "diag:1,x,2"), Error);
  CHECK_THROWS_AS(metric_from_spec(c, "/nonexistent/metric.json"), Error);

  const auto path = std::filesystem::temp_directory_path() / "ga_test_metric.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 3, "matrix": [[2,0,0],[0,-1,0],[0,0,3]]})";
  }
  const auto f = metric_from_spec(c, path.string());
  CHECK(f.q() == 1);
  CHECK(f.det() == doctest::Approx(-6.0));
  std::filesystem::remove(path);
}
