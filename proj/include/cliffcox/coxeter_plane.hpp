#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>
#include <vector>

#include "cliffcox/multivector.hpp"
#include "cliffcox/root_system.hpp"

namespace cliffcox {

struct CoxeterDescriptor {
  Multivectord versor;
  Parity parity = Parity::Even;
  int h = 0;
  /// Unit bivector of the plane rotated by 2 pi / h; absent when h <= 2.
  std::optional<Multivectord> plane;
  /// Unit normal plane * I, rank 3 only.
  std::optional<Multivectord> normal;
  std::vector<int> exponents;
};

/// Product of the simple roots, in catalog order or in the order given by
/// `order` (a permutation of 0..k-1).
Multivectord coxeter_versor(std::span<const Multivectord> simple, std::span<const int> order = {});

/// Smallest h with the h-fold action equal to the identity on every basis
/// vector.  For even W in two dimensions also checks W^h = +/-1.
int coxeter_number(const Multivectord& w, int bound = 1000, double tol = kDedupTolerance);

/// Invariant plane on which the action of W is a rotation by 2 pi / h, as a
/// unit bivector whose first nonzero blade coefficient is positive.
Multivectord coxeter_plane(const Multivectord& w, int h);
Multivectord coxeter_plane(const Multivectord& w);

/// Unit vector plane * I (3D only), normalised with the same sign rule.
Multivectord plane_normal(const Multivectord& plane);

/// Integers m with e^(+-2 pi i m / h) the non-unit eigenvalues of the action.
/// Eigenvalue -1 counts once as m = h/2.
std::vector<int> exponents(const Multivectord& w, int h, double angle_tol = 1e-6);

/// Orthonormal in-plane basis (u1, u2) with u2 = u1 . plane.
std::pair<Multivectord, Multivectord> plane_basis(const Multivectord& plane);

std::vector<Eigen::Vector2d> project_to_plane(std::span<const Multivectord> points,
                                              const Multivectord& plane);

struct OrbitReport {
  std::vector<Multivectord> points;
  bool in_plane = false;
  bool normal = false;
  std::size_t size() const { return points.size(); }
};

/// Orbit of v under repeated action of W, classified against W's Coxeter plane.
OrbitReport plane_orbit_decomposition(const Multivectord& w, const Multivectord& v,
                                      double tol = kDedupTolerance);

CoxeterDescriptor describe_coxeter(std::span<const Multivectord> simple);

}  // namespace cliffcox
