#include "cliffcox/conformal.hpp"

#include <cmath>

namespace cliffcox {

ConformalContext::ConformalContext(double lambda) : lambda_(lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
}

Multivectord conformal_vector(const Eigen::VectorXd& x) {
  if (x.size() > 3) throw DomainError("Euclidean part has at most 3 components");
  if (!x.allFinite()) throw DomainError("non-finite coordinates");
  return Multivectord::vector(kConformal, x);
}

ConformalPoint embed(const Eigen::VectorXd& x, const ConformalContext& ctx) {
  const double lambda = ctx.lambda();
  return {x.squaredNorm() * ctx.n() + (2.0 * lambda) * conformal_vector(x) -
          (lambda * lambda) * ctx.nbar()};
}

namespace {

/// Coefficient b of n-bar in X = a n + b n-bar + x; equals (X . n) / 2.
double nbar_coefficient(const Multivectord& x) {
  return 0.5 * (x[ConformalContext::kE] - x[ConformalContext::kEbar]);
}

}  // namespace

ConformalPoint canonicalize(const ConformalPoint& p, const ConformalContext& ctx) {
  const double b = nbar_coefficient(p.X);
  if (std::abs(b) <= 1e-12 * std::max(1.0, p.X.coeffs().cwiseAbs().maxCoeff())) {
    throw DomainError("point at infinity (X . n = 0)");
  }
  return {p.X * (-ctx.lambda() * ctx.lambda() / b)};
}

Eigen::Vector3d extract(const ConformalPoint& p, const ConformalContext& ctx) {
  const Multivectord x = canonicalize(p, ctx).X;
  return Eigen::Vector3d(x[0b001], x[0b010], x[0b100]) / (2.0 * ctx.lambda());
}

ConformalPoint conformal_reflect(const ConformalPoint& p, const Eigen::VectorXd& alpha,
                                 const ConformalContext&) {
  const Multivectord a = conformal_vector(alpha);
  const double a2 = dot(a, a);
  if (std::abs(a2) <= 1e-12) throw DomainError("null mirror vector");
  return {-(versor_inverse(a) * p.X * a)};
}

Multivectord translation_rotor(const Eigen::VectorXd& a, const ConformalContext& ctx) {
  return Multivectord::scalar(kConformal, 1.0) + (ctx.n() * conformal_vector(a)) / (2.0 * ctx.lambda());
}

ConformalPoint translate(const ConformalPoint& p, const Eigen::VectorXd& a,
                         const ConformalContext& ctx) {
  const Multivectord t = translation_rotor(a, ctx);
  return {t * p.X * reverse(t)};
}

Multivectord lift_versor(const Multivectord& euclidean) {
  if (euclidean.signature().q() != 0 || euclidean.signature().dim() > 3) {
    throw DomainError("lift_versor expects a Euclidean versor of dimension <= 3");
  }
  return embed_into(euclidean, kConformal);
}

ConformalPoint apply_versor(const ConformalPoint& p, const Versord& lifted) {
  return {sandwich(p.X, lifted)};
}

std::vector<Eigen::Vector3d> conformal_root_closure(const std::vector<Eigen::Vector3d>& simple,
                                                    const ConformalContext& ctx, double tol,
                                                    std::size_t limit) {
  std::vector<ConformalPoint> points;
  std::vector<Eigen::Vector3d> roots;
  PointSet<double> seen(tol);
  auto add = [&](const ConformalPoint& p) {
    const ConformalPoint c = canonicalize(p, ctx);
    if (!seen.insert(Eigen::VectorXd(c.X.coeffs())).second) return;
    points.push_back(c);
    roots.push_back(extract(c, ctx));
    if (roots.size() > limit) throw DomainError("conformal root closure did not terminate");
  };
  for (const auto& s : simple) add(embed(s, ctx));

  std::size_t done = 0;
  while (done < points.size()) {
    const std::size_t end = points.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < end; ++j) {
        const ConformalPoint p = points[i];
        const Eigen::Vector3d mirror = roots[j];
        add(conformal_reflect(p, mirror, ctx));
      }
    }
    done = end;
  }
  return roots;
}

}  // namespace cliffcox
