#include "cliffcox/spinor_induction.hpp"

#include <map>

namespace cliffcox {

namespace {
constexpr Blade kE12 = 0b011;
constexpr Blade kE13 = 0b101;
constexpr Blade kE23 = 0b110;
}  // namespace

Vector4 spinor_to_4d(const Multivectord& psi, double tol) {
  if (!(psi.signature() == kEuclidean3)) throw DomainError("spinor_to_4d expects Cl(3,0)");
  if (odd_part(psi).coeffs().cwiseAbs().maxCoeff() > tol) {
    throw DomainError("spinor_to_4d: odd-grade content in spinor");
  }
  // e3e1 = -e1e3 in the canonical blade order.
  return {psi[0], psi[kE23], -psi[kE13], psi[kE12]};
}

Vector4 reflect4(const Vector4& v, const Vector4& alpha) { return v - 2.0 * alpha.dot(v) * alpha; }

std::optional<std::pair<std::size_t, std::size_t>> find_reflection_escape4(
    const std::vector<Vector4>& roots, double tol) {
  PointSet<double> set(tol);
  for (const auto& r : roots) set.insert(r);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (!set.contains(reflect4(roots[i], roots[j]))) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

RootSystem4 induce_root_system(const VersorGroup& vg, double tol) {
  static const std::map<std::size_t, std::string> labels = {
      {8, "A1^4"}, {24, "D4"}, {48, "F4"}, {120, "H4"}};
  RootSystem4 out;
  PointSet<double> seen(tol);
  for (const auto& psi : vg.elements) {
    const Vector4 v = spinor_to_4d(psi, tol);
    if (std::abs(v.squaredNorm() - 1.0) > tol) throw DomainError("induced vector is not unit");
    if (seen.insert(v).second) out.roots.push_back(v);
  }
  if (out.roots.size() != vg.elements.size()) throw DomainError("spinor map is not injective");
  const auto it = labels.find(out.roots.size());
  if (it == labels.end()) {
    throw DomainError("group of order " + std::to_string(out.roots.size()) +
                      " is not a binary polyhedral group");
  }
  if (const auto escape = find_reflection_escape4(out.roots, tol)) {
    throw DomainError("induced set not closed under reflection (pair " +
                      std::to_string(escape->first) + ", " + std::to_string(escape->second) + ")");
  }
  out.label = it->second;
  return out;
}

std::vector<Eigen::Vector2d> induce_planar_root_system(const VersorGroup& vg, double tol) {
  std::vector<Eigen::Vector2d> out;
  for (const auto& psi : vg.elements) {
    if (!(psi.signature() == kEuclidean2)) throw DomainError("planar induction expects Cl(2,0)");
    out.emplace_back(psi[0], psi[kE12]);
  }
  PointSet<double> set(tol);
  for (const auto& r : out) set.insert(r);
  for (const auto& v : out) {
    for (const auto& a : out) {
      if (!set.contains(Eigen::Vector2d(v - 2.0 * a.dot(v) * a))) {
        throw DomainError("planar induced set not closed under reflection");
      }
    }
  }
  return out;
}

}  // namespace cliffcox
