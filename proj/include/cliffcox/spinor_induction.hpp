#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffcox/multivector.hpp"
#include "cliffcox/versor_group.hpp"

namespace cliffcox {

/// Spinor w + x e2e3 + y e3e1 + z e1e2 read as the 4D vector (w, x, y, z).
using Vector4 = Eigen::Vector4d;

struct RootSystem4 {
  std::string label;  // A1^4, D4, F4 or H4
  std::vector<Vector4> roots;
};

/// Components in the order (1, e2e3, e3e1, e1e2).  Requires an even element
/// of Cl(3,0).
Vector4 spinor_to_4d(const Multivectord& psi, double tol = kDedupTolerance);

/// v - 2 (alpha.v) alpha for unit alpha.
Vector4 reflect4(const Vector4& v, const Vector4& alpha);

/// First ordered pair (i, j) with reflect4(roots[i], roots[j]) outside the set.
std::optional<std::pair<std::size_t, std::size_t>> find_reflection_escape4(
    const std::vector<Vector4>& roots, double tol = kDedupTolerance);

/// Map a binary polyhedral spin group to 4D and check that the image is a
/// root system.  Labels by cardinality: 8 A1^4, 24 D4, 48 F4, 120 H4.
RootSystem4 induce_root_system(const VersorGroup& vg, double tol = kDedupTolerance);

/// Experimental planar analogue: the rotors w + x e1e2 of an I2(n) spin group
/// read as (w, x).  Closure under planar reflection is checked; no
/// normalisation beyond unit rotors is applied.
std::vector<Eigen::Vector2d> induce_planar_root_system(const VersorGroup& vg,
                                                       double tol = kDedupTolerance);

}  // namespace cliffcox
