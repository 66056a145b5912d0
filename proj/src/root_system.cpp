#include "cliffcox/root_system.hpp"

#include <Eigen/LU>

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace cliffcox {

namespace {

std::string normalize_token(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

Multivectord vec3(double x, double y, double z) {
  return Multivectord::vector(kEuclidean3, Eigen::Vector3d(x, y, z));
}

}  // namespace

GroupId GroupId::i2(int n) {
  if (n < 3) throw DomainError("I2(n) requires n >= 3, got " + std::to_string(n));
  return {Family::I2, n};
}

GroupId GroupId::parse(std::string_view text) {
  const std::string t = normalize_token(text);
  if (t == "A1A1A1" || t == "A1XA1XA1" || t == "A1^3" || t == "A13") return a1a1a1();
  if (t == "A3") return a3();
  if (t == "B3") return b3();
  if (t == "H3") return h3();
  if (t == "H2") return i2(5);
  if (t.size() > 2 && t.compare(0, 2, "I2") == 0) {
    std::string_view rest(t);
    rest.remove_prefix(2);
    if (!rest.empty() && (rest.front() == ':' || rest.front() == '(')) rest.remove_prefix(1);
    if (!rest.empty() && rest.back() == ')') rest.remove_suffix(1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) return i2(n);
  }
  throw DomainError("unknown group id '" + std::string(text) + "'");
}

std::string GroupId::name() const {
  switch (family) {
    case Family::A1A1A1: return "A1A1A1";
    case Family::A3: return "A3";
    case Family::B3: return "B3";
    case Family::H3: return "H3";
    case Family::I2: return "I2(" + std::to_string(n) + ")";
  }
  return "?";
}

std::vector<Eigen::VectorXd> RootSystem::coordinates() const {
  std::vector<Eigen::VectorXd> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.vector_part());
  return out;
}

std::vector<Multivectord> simple_roots(const GroupId& id) {
  const double r2 = std::sqrt(0.5);
  switch (id.family) {
    case GroupId::Family::A1A1A1:
      return {vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
    case GroupId::Family::A3:
      // D3 realisation of A3.
      return {vec3(r2, -r2, 0), vec3(0, r2, -r2), vec3(0, r2, r2)};
    case GroupId::Family::B3:
      return {vec3(r2, -r2, 0), vec3(0, r2, -r2), vec3(0, 0, 1)};
    case GroupId::Family::H3:
      return {vec3(0, 1, 0), vec3(-0.5 * (kTau - 1.0), -0.5, -0.5 * kTau), vec3(0, 0, 1)};
    case GroupId::Family::I2: {
      if (id.n < 3) throw DomainError("I2(n) requires n >= 3");
      const double angle = std::numbers::pi / id.n;
      return {Multivectord::vector(kEuclidean2, Eigen::Vector2d(1, 0)),
              Multivectord::vector(kEuclidean2, Eigen::Vector2d(-std::cos(angle), std::sin(angle)))};
    }
  }
  throw DomainError("unknown group id");
}

std::vector<double> simple_root_lengths(const GroupId& id) {
  if (id.family == GroupId::Family::B3) return {std::sqrt(2.0), std::sqrt(2.0), 1.0};
  return std::vector<double>(static_cast<std::size_t>(id.rank()), 1.0);
}

RootSystem close_under_reflections(std::span<const Multivectord> simple,
                                   std::span<const double> lengths, double tol,
                                   std::size_t limit) {
  if (simple.empty()) throw DomainError("no simple roots given");
  if (!lengths.empty() && lengths.size() != simple.size()) {
    throw DomainError("one length tag per simple root required");
  }
  const Signature sig = simple.front().signature();
  Eigen::MatrixXd basis(sig.dim(), static_cast<Eigen::Index>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i) {
    const auto& a = simple[i];
    if (!(a.signature() == sig)) throw DomainError("simple roots from different algebras");
    if (!is_grade(a, 1, tol)) throw DomainError("simple root is not a vector");
    if (std::abs(dot(a, a) - 1.0) > tol) throw DomainError("simple root is not unit");
    basis.col(static_cast<Eigen::Index>(i)) = a.vector_part();
  }
  if (Eigen::FullPivLU<Eigen::MatrixXd>(basis).rank() != static_cast<Eigen::Index>(simple.size())) {
    throw DomainError("simple roots are linearly dependent");
  }

  RootSystem rs;
  rs.rank = static_cast<int>(simple.size());
  rs.simple_roots.assign(simple.begin(), simple.end());

  PointSet<double> seen(tol);
  auto add = [&](const Multivectord& r, double length) {
    if (seen.insert(r.vector_part()).second) {
      rs.roots.push_back(r);
      rs.lengths.push_back(length);
      if (rs.roots.size() > limit) {
        throw DomainError("root closure exceeded " + std::to_string(limit) +
                          " roots; input does not generate a finite group");
      }
    }
  };
  for (std::size_t i = 0; i < simple.size(); ++i) add(simple[i], lengths.empty() ? 1.0 : lengths[i]);

  // Pairs with both indices below `done` were handled in an earlier sweep.
  std::size_t done = 0;
  while (done < rs.roots.size()) {
    const std::size_t end = rs.roots.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < end; ++j) {
        // Copies: `add` may reallocate rs.roots.
        const Multivectord beta = rs.roots[i];
        const Multivectord alpha = rs.roots[j];
        const double length = rs.lengths[i];
        add(reflect(beta, alpha), length);
      }
    }
    done = end;
  }
  return rs;
}

RootSystem root_system(const GroupId& id) {
  const auto simple = simple_roots(id);
  const auto lengths = simple_root_lengths(id);
  RootSystem rs = close_under_reflections(simple, lengths);
  rs.group = id.name();
  return rs;
}

Eigen::MatrixXd cartan_matrix(std::span<const Multivectord> simple) {
  const auto k = static_cast<Eigen::Index>(simple.size());
  Eigen::MatrixXd a(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double ii = dot(simple[i], simple[i]);
    if (std::abs(ii) <= 1e-12) throw DomainError("cartan_matrix: null simple root");
    for (Eigen::Index j = 0; j < k; ++j) {
      a(i, j) = (i == j) ? 2.0 : 2.0 * dot(simple[i], simple[j]) / ii;
    }
  }
  return a;
}

Eigen::MatrixXd cartan_matrix(const RootSystem& rs) {
  std::vector<Multivectord> scaled;
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
    scaled.push_back(rs.simple_roots[i] * (i < rs.lengths.size() ? rs.lengths[i] : 1.0));
  }
  return cartan_matrix(scaled);
}

std::optional<std::pair<std::size_t, std::size_t>> find_reflection_escape(
    std::span<const Multivectord> roots, double tol) {
  PointSet<double> set(tol);
  for (const auto& r : roots) set.insert(r.vector_part());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (!set.contains(reflect(roots[i], roots[j]).vector_part())) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace cliffcox
