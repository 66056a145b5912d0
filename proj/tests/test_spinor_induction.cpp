#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cliffcox/spinor_induction.hpp"
#include "support/helpers.hpp"

using namespace cliffcox;

namespace {

bool in_set(double x, std::initializer_list<double> values) {
  for (double v : values) {
    if (std::abs(x - v) < 1e-9) return true;
  }
  return false;
}

RootSystem4 induced(const GroupId& id) { return induce_root_system(generate_spin_group(root_system(id))); }

}  // namespace

TEST_CASE("spinor_to_4d examples") {
  CHECK(spinor_to_4d(Multivectord::scalar(kEuclidean3, 1.0)) == Vector4(1, 0, 0, 0));
  CHECK(spinor_to_4d(Multivectord::blade(kEuclidean3, 0b011)) == Vector4(0, 0, 0, 1));
  CHECK(spinor_to_4d(Multivectord::blade(kEuclidean3, 0b110)) == Vector4(0, 1, 0, 0));
  // e3e1 = -e1e3
  CHECK(spinor_to_4d(Multivectord::blade(kEuclidean3, 0b101, -1.0)) == Vector4(0, 0, 1, 0));

  const double c = std::cos(std::numbers::pi / 5), s = std::sin(std::numbers::pi / 5);
  const Multivectord w = embed_into(Multivectord::scalar(kEuclidean2, -c) + Multivectord::blade(kEuclidean2, 0b11, s),
                                    kEuclidean3);
  CHECK((spinor_to_4d(w) - Vector4(-c, 0, 0, s)).norm() < 1e-15);
}

TEST_CASE("spinor_to_4d errors") {
  CHECK_THROWS_AS(spinor_to_4d(Multivectord::basis(kEuclidean3, 0)), DomainError);
  CHECK_THROWS_AS(spinor_to_4d(Multivectord::scalar(kEuclidean2, 1.0)), DomainError);
}

TEST_CASE("4D norm equals the spinor norm") {
  for (int t = 0; t < 200; ++t) {
    const Multivectord psi = testing::random_unit_versor(kEuclidean3, 2) * testing::uniform(0.5, 2.0);
    CHECK(std::abs(spinor_to_4d(psi).squaredNorm() - (psi * reverse(psi)).scalar_part()) < 1e-12);
  }
}

TEST_CASE("reflect4") {
  CHECK(reflect4(Vector4(1, 0, 0, 0), Vector4(1, 0, 0, 0)) == Vector4(-1, 0, 0, 0));
  CHECK(reflect4(Vector4(0, 1, 0, 0), Vector4(1, 0, 0, 0)) == Vector4(0, 1, 0, 0));
  for (int t = 0; t < 200; ++t) {
    const Vector4 v = testing::random_vector(4);
    const Vector4 a = testing::random_unit(4);
    CHECK((reflect4(reflect4(v, a), a) - v).norm() < 1e-12);
    CHECK(std::abs(reflect4(v, a).norm() - v.norm()) < 1e-12);
  }
}

TEST_CASE("induced root systems") {
  const std::pair<GroupId, std::pair<const char*, std::size_t>> cases[] = {
      {GroupId::a1a1a1(), {"A1^4", 8}},
      {GroupId::a3(), {"D4", 24}},
      {GroupId::b3(), {"F4", 48}},
      {GroupId::h3(), {"H4", 120}},
  };
  for (const auto& [id, want] : cases) {
    const RootSystem4 rs = induced(id);
    CHECK(rs.label == want.first);
    CHECK(rs.roots.size() == want.second);
    CHECK_FALSE(find_reflection_escape4(rs.roots).has_value());
    PointSet<double> set;
    for (const auto& r : rs.roots) set.insert(r);
    for (const auto& r : rs.roots) CHECK(set.contains(Eigen::VectorXd(-r)));
  }
}

TEST_CASE("A1^4 roots are the signed unit axes") {
  const RootSystem4 rs = induced(GroupId::a1a1a1());
  for (const auto& r : rs.roots) {
    CHECK(std::abs(r.cwiseAbs().maxCoeff() - 1.0) < 1e-12);
    CHECK(std::abs(r.cwiseAbs().sum() - 1.0) < 1e-12);
  }
}

TEST_CASE("induced coordinates") {
  // Unit-length realisations: D4 and F4 coordinates are multiples of 1/2 or
  // 1/sqrt(2); H4 coordinates lie in 1/2 {0, +-1, +-tau, +-(tau-1), +-2}.
  const double h = 0.5, r = 1 / std::sqrt(2.0);
  for (const GroupId& id : {GroupId::a3(), GroupId::b3()}) {
    for (const auto& v : induced(id).roots) {
      for (int i = 0; i < 4; ++i) CHECK(in_set(v[i], {0, 1, -1, h, -h, r, -r}));
    }
  }
  for (const auto& v : induced(GroupId::h3()).roots) {
    for (int i = 0; i < 4; ++i) {
      CHECK(in_set(2 * v[i], {0, 1, -1, kTau, -kTau, kTau - 1, 1 - kTau, 2, -2}));
    }
  }
}

TEST_CASE("reflection of an H4 root lands in the set") {
  const RootSystem4 rs = induced(GroupId::h3());
  PointSet<double> set;
  for (const auto& r : rs.roots) set.insert(r);
  CHECK(set.contains(Eigen::VectorXd(reflect4(rs.roots[7], rs.roots[42]))));
}

TEST_CASE("products of spinors stay unit in 4D") {
  const VersorGroup g = generate_spin_group(root_system(GroupId::h3()));
  for (std::size_t i = 0; i < g.order(); i += 7) {
    for (std::size_t j = 0; j < g.order(); j += 11) {
      CHECK(std::abs(spinor_to_4d(g.elements[i] * g.elements[j]).norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("induction rejects groups that do not give a root system") {
  VersorGroup g = generate_spin_group(root_system(GroupId::a3()));
  g.elements.pop_back();
  CHECK_THROWS_AS(induce_root_system(g), DomainError);
  VersorGroup pin = generate_pin_group(root_system(GroupId::a1a1a1()));
  CHECK_THROWS_AS(induce_root_system(pin), DomainError);
}

TEST_CASE("experimental planar induction is closed") {
  for (int n = 3; n <= 8; ++n) {
    const auto pts = induce_planar_root_system(generate_spin_group(root_system(GroupId::i2(n))));
    CHECK(pts.size() == static_cast<std::size_t>(2 * n));
  }
}
