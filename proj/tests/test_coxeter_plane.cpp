#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cliffcox/coxeter_plane.hpp"
#include "support/helpers.hpp"

using namespace cliffcox;

namespace {

const double pi = std::numbers::pi;

Multivectord bivector(double e12, double e13, double e23) {
  Multivectord b(kEuclidean3);
  b[0b011] = e12;
  b[0b101] = e13;
  b[0b110] = e23;
  return b;
}

Multivectord unit(const Multivectord& x) { return x / std::sqrt(norm_squared(x)); }

const GroupId kRank3[] = {GroupId::a1a1a1(), GroupId::a3(), GroupId::b3(), GroupId::h3()};

}  // namespace

TEST_CASE("I2(n) Coxeter versor") {
  for (int n = 3; n <= 12; ++n) {
    const Multivectord w = coxeter_versor(simple_roots(GroupId::i2(n)));
    const Multivectord expected = Multivectord::scalar(kEuclidean2, -std::cos(pi / n)) +
                                  Multivectord::blade(kEuclidean2, 0b11, std::sin(pi / n));
    CHECK(max_abs_diff(w, expected) < 1e-15);
    const Multivectord wn = power(w, n);
    CHECK(max_abs_diff(wn, Multivectord::scalar(kEuclidean2, n % 2 ? 1.0 : -1.0)) < 1e-12);
    CHECK(coxeter_number(w) == n);
    const auto m = exponents(w, n);
    CHECK(m == std::vector<int>{1, n - 1});
    CHECK(max_abs_diff(coxeter_plane(w), Multivectord::blade(kEuclidean2, 0b11)) < 1e-12);
  }
}

TEST_CASE("H3 Coxeter versor, plane and normal") {
  const auto simple = simple_roots(GroupId::h3());
  const Multivectord w = coxeter_versor(simple);
  Multivectord expected(kEuclidean3);
  expected[0b010] = -kTau / 2;
  expected[0b100] = -0.5;
  expected[0b111] = (kTau - 1) / 2;
  CHECK(max_abs_diff(w, expected) < 1e-12);
  CHECK(coxeter_number(w) == 10);

  // e1e2 + tau e3e1 = e1e2 - tau e1e3
  const Multivectord reference = unit(bivector(1, -kTau, 0));
  const Multivectord plane = coxeter_plane(w);
  CHECK(std::min(max_abs_diff(plane, reference), max_abs_diff(plane, -reference)) < 1e-9);
  CHECK(std::abs((plane * reverse(plane)).scalar_part() - 1.0) < 1e-12);

  const Multivectord normal = plane_normal(plane);
  const Eigen::Vector3d bc = Eigen::Vector3d(0, -kTau, -1).normalized();
  CHECK(std::min((normal.vector_part() - bc).norm(), (normal.vector_part() + bc).norm()) < 1e-9);
}

TEST_CASE("A1A1A1 Coxeter versor is the pseudoscalar") {
  const Multivectord w = coxeter_versor(simple_roots(GroupId::a1a1a1()));
  CHECK(max_abs_diff(w, Multivectord::blade(kEuclidean3, 0b111)) == 0.0);
  CHECK(coxeter_number(w) == 2);
  CHECK_THROWS_AS(coxeter_plane(w), DomainError);
  const CoxeterDescriptor d = describe_coxeter(simple_roots(GroupId::a1a1a1()));
  CHECK_FALSE(d.plane.has_value());
  CHECK(d.exponents == std::vector<int>{1, 1, 1});
}

TEST_CASE("Coxeter numbers and exponents") {
  const std::pair<GroupId, std::pair<int, std::vector<int>>> cases[] = {
      {GroupId::h3(), {10, {1, 5, 9}}},
      {GroupId::a3(), {4, {1, 2, 3}}},
      {GroupId::b3(), {6, {1, 3, 5}}},
  };
  for (const auto& [id, want] : cases) {
    const CoxeterDescriptor d = describe_coxeter(simple_roots(id));
    CHECK(d.h == want.first);
    CHECK(d.exponents == want.second);
    CHECK(d.parity == Parity::Odd);
    CHECK(d.exponents.size() == 3);
    for (int m : d.exponents) {
      CHECK(std::find(d.exponents.begin(), d.exponents.end(), d.h - m) != d.exponents.end());
    }
    REQUIRE(d.plane.has_value());
    REQUIRE(d.normal.has_value());
    // normal is orthogonal to the plane
    const auto [u1, u2] = plane_basis(*d.plane);
    CHECK(std::abs(dot(*d.normal, u1)) < 1e-12);
    CHECK(std::abs(dot(*d.normal, u2)) < 1e-12);
  }
}

TEST_CASE("h is independent of the simple-root order") {
  for (const auto& id : kRank3) {
    const auto simple = simple_roots(id);
    const int h = coxeter_number(coxeter_versor(simple));
    std::vector<int> order = {0, 1, 2};
    int perms = 0;
    do {
      CHECK(coxeter_number(coxeter_versor(simple, order)) == h);
      ++perms;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(perms == 6);
  }
  const std::vector<int> bad = {0, 0, 1};
  CHECK_THROWS_AS(coxeter_versor(simple_roots(GroupId::h3()), bad), DomainError);
}

TEST_CASE("h is the exact order on random vectors") {
  for (const auto& id : kRank3) {
    const Multivectord w = coxeter_versor(simple_roots(id));
    const Versord v = Versord::from(w);
    const int h = coxeter_number(w);
    for (int t = 0; t < 100; ++t) {
      const Multivectord x0 = testing::random_unit_vector_mv(kEuclidean3);
      Multivectord x = x0;
      for (int k = 1; k <= h; ++k) {
        x = sandwich(x, v);
        if (k == h) CHECK(max_abs_diff(x, x0) < 1e-9);
      }
    }
    // no smaller power is the identity on the basis
    for (int k = 1; k < h; ++k) {
      bool identity = true;
      for (int i = 0; i < 3; ++i) {
        Multivectord x = Multivectord::basis(kEuclidean3, i);
        for (int j = 0; j < k; ++j) x = sandwich(x, v);
        identity = identity && max_abs_diff(x, Multivectord::basis(kEuclidean3, i)) < 1e-9;
      }
      CHECK_FALSE(identity);
    }
  }
}

TEST_CASE("in-plane rotation angle and plane invariance") {
  for (const auto& id : {GroupId::a3(), GroupId::b3(), GroupId::h3()}) {
    const CoxeterDescriptor d = describe_coxeter(simple_roots(id));
    const auto [u1, u2] = plane_basis(*d.plane);
    const Versord v = Versord::from(d.versor);
    for (int t = 0; t < 20; ++t) {
      const double th = testing::uniform(0, 2 * pi);
      const Multivectord x = std::cos(th) * u1 + std::sin(th) * u2;
      const Multivectord y = sandwich(x, v);
      CHECK(std::abs(std::acos(std::clamp(dot(x, y), -1.0, 1.0)) - 2 * pi / d.h) < 1e-9);
      const double a = dot(y, u1), b = dot(y, u2);
      CHECK(std::abs(a * a + b * b - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("odd Coxeter versor keeps the plane and flips the normal") {
  const CoxeterDescriptor d = describe_coxeter(simple_roots(GroupId::h3()));
  const Multivectord image = raw_sandwich(*d.plane, d.versor);
  CHECK(max_abs_diff(image, *d.plane) < 1e-9);
  CHECK(max_abs_diff(sandwich(*d.normal, d.versor), -*d.normal) < 1e-9);
}

TEST_CASE("projection") {
  const auto simple = simple_roots(GroupId::h3());
  const Multivectord plane = coxeter_plane(coxeter_versor(simple));
  const RootSystem rs = root_system(GroupId::h3());
  const auto pts = project_to_plane(rs.roots, plane);
  REQUIRE(pts.size() == 30);

  // 10-fold rotational symmetry of the projected set
  std::vector<Eigen::VectorXd> set(pts.begin(), pts.end());
  const Eigen::Rotation2Dd rot(2 * pi / 10);
  std::vector<Eigen::VectorXd> rotated;
  for (const auto& p : pts) rotated.push_back(rot * p);
  CHECK(same_point_set<double>(set, rotated));

  // normal goes to the origin
  const Multivectord normal = plane_normal(plane);
  const auto origin = project_to_plane(std::vector<Multivectord>{normal}, plane);
  CHECK(origin[0].norm() < 1e-12);

  // plane e1e2: identity on in-plane coordinates
  const Multivectord e12 = Multivectord::blade(kEuclidean3, 0b011);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Vector3d x(testing::uniform(), testing::uniform(), 0);
    const auto p = project_to_plane(std::vector<Multivectord>{Multivectord::vector(kEuclidean3, x)}, e12);
    CHECK((p[0] - x.head<2>()).norm() < 1e-15);
  }
}

TEST_CASE("projection preserves in-plane distances") {
  const CoxeterDescriptor d = describe_coxeter(simple_roots(GroupId::b3()));
  const auto [u1, u2] = plane_basis(*d.plane);
  std::vector<Multivectord> pts;
  for (int t = 0; t < 10; ++t) pts.push_back(testing::uniform() * u1 + testing::uniform() * u2);
  const auto proj = project_to_plane(pts, *d.plane);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const Multivectord diff = pts[i] - pts[j];
      CHECK(std::abs((proj[i] - proj[j]).norm() - std::sqrt(dot(diff, diff))) < 1e-12);
    }
  }
}

TEST_CASE("H3 plane orbits") {
  const auto simple = simple_roots(GroupId::h3());
  const Multivectord w = coxeter_versor(simple);
  const Multivectord plane = coxeter_plane(w);

  const OrbitReport decagon = plane_orbit_decomposition(w, Multivectord::basis(kEuclidean3, 0));
  CHECK(decagon.size() == 10);
  CHECK_FALSE(decagon.normal);
  const auto pts = project_to_plane(decagon.points, plane);
  // W flips the normal, so the orbit of e1 zig-zags across the plane and
  // projects onto a regular decagon
  const Multivectord normal = plane_normal(plane);
  const double offset = dot(Multivectord::basis(kEuclidean3, 0), normal);
  for (std::size_t i = 0; i < decagon.size(); ++i) {
    CHECK(std::abs(dot(decagon.points[i], normal) - (i % 2 ? -offset : offset)) < 1e-12);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Eigen::Vector2d a = pts[i], b = pts[(i + 1) % pts.size()];
    CHECK(std::abs(std::acos(std::clamp(a.dot(b) / (a.norm() * b.norm()), -1.0, 1.0)) - 2 * pi / 10) < 1e-9);
  }

  const OrbitReport normal_orbit = plane_orbit_decomposition(w, normal);
  CHECK(normal_orbit.size() == 2);
  CHECK(normal_orbit.normal);
  CHECK(max_abs_diff(normal_orbit.points[1], -normal) < 1e-9);

  // the orbit of an in-plane root is flagged in-plane
  const auto [u1, u2] = plane_basis(plane);
  const OrbitReport in_plane = plane_orbit_decomposition(w, u1);
  CHECK(in_plane.in_plane);
  CHECK(in_plane.size() == 10);
}

TEST_CASE("decagon plus normal pair is the A1xH2 root system") {
  const Multivectord w = coxeter_versor(simple_roots(GroupId::h3()));
  const Multivectord plane = coxeter_plane(w);
  const auto [u1, u2] = plane_basis(plane);
  const OrbitReport decagon = plane_orbit_decomposition(w, u1);
  std::vector<Multivectord> roots = decagon.points;
  const Multivectord n = plane_normal(plane);
  roots.push_back(n);
  roots.push_back(-n);
  CHECK(roots.size() == 12);
  CHECK_FALSE(find_reflection_escape(roots).has_value());
}
