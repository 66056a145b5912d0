#include <doctest.h>

#include "cliffcox/io.hpp"
#include "support/helpers.hpp"

using namespace cliffcox;
using io::Json;

TEST_CASE("multivector JSON schema") {
  Multivectord m(kEuclidean3);
  m[0] = 0.5;
  m[0b101] = -2.0;
  const Json j = io::to_json(m);
  CHECK(j.dump() == R"({"signature":[3,0],"coeffs":{"0":0.5,"5":-2.0}})");
  CHECK(max_abs_diff(io::multivector_from_json(j), m) == 0.0);
}

TEST_CASE("property: multivector JSON round trip") {
  for (const Signature sig : {kEuclidean2, kEuclidean3, kEuclidean4, kConformal, Signature(1, 3)}) {
    for (int t = 0; t < 200; ++t) {
      Multivectord m = testing::random_multivector(sig);
      m[static_cast<Blade>(t % sig.size())] = 0.0;
      const Json j = Json::parse(io::to_json(m).dump());
      REQUIRE(max_abs_diff(io::multivector_from_json(j), m) == 0.0);
    }
  }
}

TEST_CASE("malformed multivector JSON") {
  CHECK_THROWS_AS(io::multivector_from_json(Json::parse(R"({"coeffs":{}})")), DomainError);
  CHECK_THROWS_AS(io::multivector_from_json(Json::parse(R"({"signature":[3,0],"coeffs":{"8":1}})")), DomainError);
  CHECK_THROWS_AS(io::multivector_from_json(Json::parse(R"({"signature":[3,0],"coeffs":{"x":1}})")), DomainError);
  CHECK_THROWS_AS(io::multivector_from_json(Json::parse(R"({"signature":[3,3],"coeffs":{}})")), DomainError);
  CHECK_THROWS_AS(io::multivector_from_json(Json::parse(R"({"signature":[3,0],"coeffs":{"1":"a"}})")), DomainError);
}

TEST_CASE("stable number formatting") {
  CHECK(io::stable(1e-13) == 0.0);
  CHECK(io::stable(-1e-17) == 0.0);
  CHECK(io::format_number(kTau) == "1.61803398875");
  CHECK(io::format_number(-2.5e-16) == "0");
  CHECK(io::format_number(0.30901699437494745) == "0.309016994375");
}

TEST_CASE("scalar and vector literals") {
  CHECK(io::parse_scalar_literal("tau") == kTau);
  CHECK(io::parse_scalar_literal("-tau") == -kTau);
  CHECK(io::parse_scalar_literal("1/tau") == 1 / kTau);
  CHECK(io::parse_scalar_literal(" -1/tau ") == -1 / kTau);
  CHECK(io::parse_scalar_literal("1.618033988749895") == doctest::Approx(kTau).epsilon(1e-15));
  const Eigen::VectorXd v = io::parse_vector_literal("1,0,tau");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == kTau);
  CHECK_THROWS_AS(io::parse_scalar_literal(""), DomainError);
  CHECK_THROWS_AS(io::parse_scalar_literal("1..0"), DomainError);
  CHECK_THROWS_AS(io::parse_scalar_literal("2tau"), DomainError);
  CHECK_THROWS_AS(io::parse_vector_literal("1,,0"), DomainError);
  CHECK_THROWS_AS(io::parse_vector_literal("nan,0"), DomainError);
}

TEST_CASE("root system export") {
  const RootSystem rs = root_system(GroupId::i2(3));
  const Json j = io::to_json(rs);
  CHECK(j["group"] == "I2(3)");
  CHECK(j["rank"] == 2);
  CHECK(j["roots"].size() == 6);
  CHECK(j["simple_roots"][0] == Json::parse("[1.0, 0.0]"));
  const std::string csv = io::to_csv(rs);
  CHECK(csv.rfind("x,y\n1,0\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("group export and multiplication table") {
  const VersorGroup g = generate_spin_group(root_system(GroupId::a1a1a1()));
  const Json j = io::to_json(g);
  CHECK(j["order"] == 8);
  CHECK(j["parity"] == "even");
  CHECK(j["elements"].size() == 8);
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(max_abs_diff(io::multivector_from_json(j["elements"][i]), g.elements[i]) < 1e-12);
  }
  const std::string table = io::multiplication_table_csv(g);
  CHECK(std::count(table.begin(), table.end(), '\n') == 8);
  CHECK(table.find("-1") == std::string::npos);
}

TEST_CASE("array export") {
  const RootSystem rs = root_system(GroupId::i2(5));
  const OrthogonalGroup c5 = realize_orthogonal(generate_spin_group(rs));
  const PointArray arr = affine_orbit(SeedPolytope::pentagon(), c5, TranslationSpec::make(Eigen::Vector2d(1, 0), kTau));
  const std::string csv = io::to_csv(arr);
  CHECK(csv.rfind("x,y,multiplicity\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
  const Json j = io::to_json(arr);
  CHECK(j["count"] == 20);
  CHECK(j["candidate_count"] == 25);
  CHECK(j["points"][0]["provenance"].is_array());
}

TEST_CASE("sweep export") {
  const std::vector<SweepEntry> sweep = {{1.0, 15}, {kTau, 20}};
  CHECK(io::to_csv(sweep) == "length,cardinality\n1,15\n1.61803398875,20\n");
}
