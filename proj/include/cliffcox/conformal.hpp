#pragma once

#include <Eigen/Core>

#include <vector>

#include "cliffcox/multivector.hpp"
#include "cliffcox/point_set.hpp"

namespace cliffcox {

/// Cl(4,1) with basis e1, e2, e3, e (index 3, squares to +1) and e-bar
/// (index 4, squares to -1).  n = e + e-bar and n-bar = e - e-bar are null,
/// with n . n-bar = 2.
class ConformalContext {
 public:
  static constexpr Blade kE = Blade{1} << 3;
  static constexpr Blade kEbar = Blade{1} << 4;

  explicit ConformalContext(double lambda = 1.0);

  double lambda() const { return lambda_; }
  Multivectord e() const { return Multivectord::blade(kConformal, kE); }
  Multivectord ebar() const { return Multivectord::blade(kConformal, kEbar); }
  Multivectord n() const { return e() + ebar(); }
  Multivectord nbar() const { return e() - ebar(); }

 private:
  double lambda_;
};

/// Null vector representing a Euclidean point (a ray: any nonzero multiple
/// denotes the same point).
struct ConformalPoint {
  Multivectord X;
};

/// Euclidean vector (up to 3 components) as a grade-1 element of Cl(4,1).
Multivectord conformal_vector(const Eigen::VectorXd& x);

/// F(x) = x^2 n + 2 lambda x - lambda^2 n-bar.
ConformalPoint embed(const Eigen::VectorXd& x, const ConformalContext& ctx);

/// Rescale the ray so its n-bar coefficient is -lambda^2.
ConformalPoint canonicalize(const ConformalPoint& p, const ConformalContext& ctx);

/// Inverse of embed on the ray; rejects points at infinity (X . n = 0).
Eigen::Vector3d extract(const ConformalPoint& p, const ConformalContext& ctx);

/// -alpha^-1 X alpha for a Euclidean mirror alpha.
ConformalPoint conformal_reflect(const ConformalPoint& p, const Eigen::VectorXd& alpha,
                                 const ConformalContext& ctx);

/// T_a = 1 + n a / (2 lambda).
Multivectord translation_rotor(const Eigen::VectorXd& a, const ConformalContext& ctx);

/// T_a X reverse(T_a), which represents x + a.
ConformalPoint translate(const ConformalPoint& p, const Eigen::VectorXd& a,
                         const ConformalContext& ctx);

/// Euclidean versor of Cl(2,0) or Cl(3,0) carried into Cl(4,1).
Multivectord lift_versor(const Multivectord& euclidean);

/// Orthogonal action of a lifted Euclidean versor on a conformal point.
ConformalPoint apply_versor(const ConformalPoint& p, const Versord& lifted);

/// Root closure carried out on conformal points: F(beta) is reflected in the
/// mirror alpha via -alpha^-1 F(beta) alpha until no new point appears.
/// Returns the extracted Euclidean roots in discovery order.
std::vector<Eigen::Vector3d> conformal_root_closure(const std::vector<Eigen::Vector3d>& simple,
                                                    const ConformalContext& ctx,
                                                    double tol = kDedupTolerance,
                                                    std::size_t limit = 10000);

}  // namespace cliffcox
