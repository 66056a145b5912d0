#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliffcox/multivector.hpp"
#include "cliffcox/point_set.hpp"

namespace cliffcox {

inline const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;

/// Catalog group selector.  H2 is parsed as I2(5).
struct GroupId {
  enum class Family { A1A1A1, A3, B3, H3, I2 };

  Family family = Family::H3;
  int n = 0;  // only for I2

  static GroupId a1a1a1() { return {Family::A1A1A1, 0}; }
  static GroupId a3() { return {Family::A3, 0}; }
  static GroupId b3() { return {Family::B3, 0}; }
  static GroupId h3() { return {Family::H3, 0}; }
  static GroupId i2(int n);

  /// Accepts A1A1A1 (also A1xA1xA1, A1^3), A3, B3, H3, H2, I2:n, I2(n), I2n.
  static GroupId parse(std::string_view text);

  std::string name() const;
  int rank() const { return family == Family::I2 ? 2 : 3; }
  friend bool operator==(const GroupId&, const GroupId&) = default;
};

struct RootSystem {
  std::string group;
  int rank = 0;
  std::vector<Multivectord> simple_roots;
  /// Unit roots; simple roots first, then in discovery order.
  std::vector<Multivectord> roots;
  /// Length of each root before normalisation (B3 has sqrt(2) and 1).
  std::vector<double> lengths;

  std::vector<Eigen::VectorXd> coordinates() const;
};

/// Unit simple roots of a catalog group, in catalog order.  I2(n) lives in
/// Cl(2,0), every rank-3 group in Cl(3,0).
std::vector<Multivectord> simple_roots(const GroupId& id);

/// Conventional lengths of the catalog simple roots; all 1 except B3.
std::vector<double> simple_root_lengths(const GroupId& id);

/// Reflect every known root in every known root until nothing new appears.
/// `lengths` tags each simple root with a length class that reflections carry
/// over to the generated roots; empty means all 1.
RootSystem close_under_reflections(std::span<const Multivectord> simple,
                                   std::span<const double> lengths = {},
                                   double tol = kDedupTolerance,
                                   std::size_t limit = 10000);

RootSystem root_system(const GroupId& id);

/// A_ij = 2 a_i.a_j / a_i.a_i over the given vectors; diagonal exactly 2.
Eigen::MatrixXd cartan_matrix(std::span<const Multivectord> simple);

/// Cartan matrix with each simple root rescaled to its tagged length, which
/// restores the integral form for the two-length B3 system.
Eigen::MatrixXd cartan_matrix(const RootSystem& rs);

/// First pair (i, j) whose reflection leaves the set, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_reflection_escape(
    std::span<const Multivectord> roots, double tol = kDedupTolerance);

}  // namespace cliffcox
