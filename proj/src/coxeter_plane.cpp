#include "cliffcox/coxeter_plane.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "cliffcox/versor_group.hpp"

namespace cliffcox {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Multivectord normalized(const Multivectord& x) {
  const double n2 = norm_squared(x);
  if (n2 <= 1e-24) throw DomainError("cannot normalise a zero multivector");
  return x / std::sqrt(n2);
}

/// Positive coefficient on the first blade (ascending bitmask) above 1e-9.
Multivectord with_sign_convention(const Multivectord& x) {
  for (Blade b = 0; b < static_cast<Blade>(x.size()); ++b) {
    if (std::abs(x[b]) > 1e-9) return x[b] < 0 ? -x : x;
  }
  return x;
}

Multivectord pseudoscalar(const Signature& sig) {
  return Multivectord::blade(sig, static_cast<Blade>(sig.size() - 1));
}

}  // namespace

Multivectord coxeter_versor(std::span<const Multivectord> simple, std::span<const int> order) {
  if (simple.empty()) throw DomainError("coxeter_versor: no simple roots");
  if (!order.empty()) {
    std::vector<int> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != simple.size() || sorted[i] != static_cast<int>(i)) {
        throw DomainError("coxeter_versor: order is not a permutation of the simple roots");
      }
    }
  }
  Multivectord w = Multivectord::scalar(simple.front().signature(), 1.0);
  for (std::size_t i = 0; i < simple.size(); ++i) {
    w = w * simple[order.empty() ? i : static_cast<std::size_t>(order[i])];
  }
  return w;
}

int coxeter_number(const Multivectord& w, int bound, double tol) {
  const Versord v = Versord::from(w);
  const Signature& sig = w.signature();
  std::vector<Multivectord> images;
  for (int i = 0; i < sig.dim(); ++i) images.push_back(Multivectord::basis(sig, i));
  for (int k = 1; k <= bound; ++k) {
    bool identity = true;
    for (int i = 0; i < sig.dim(); ++i) {
      images[i] = sandwich(images[i], v);
      identity = identity && approx_equal(images[i], Multivectord::basis(sig, i), tol);
    }
    if (identity) {
      if (sig.dim() == 2 && v.parity() == Parity::Even) {
        const Multivectord wk = power(w, k);
        if (off_grade_magnitude(wk, 0) > tol || std::abs(std::abs(wk.scalar_part()) - 1.0) > tol) {
          throw DomainError("W^h is not +/-1");
        }
      }
      return k;
    }
  }
  throw DomainError("coxeter_number: no h <= " + std::to_string(bound));
}

Multivectord coxeter_plane(const Multivectord& w, int h) {
  if (h <= 2) throw DomainError("no 2 pi / h eigenplane: h = " + std::to_string(h));
  const Eigen::MatrixXd m = action_matrix(w);
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  const double target = kTwoPi / h;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const std::complex<double> lambda = es.eigenvalues()[i];
    if (lambda.imag() <= 0 || std::abs(std::arg(lambda) - target) > 1e-6) continue;
    const Eigen::VectorXcd u = es.eigenvectors().col(i);
    const Multivectord a = Multivectord::vector(w.signature(), Eigen::VectorXd(u.real()));
    const Multivectord b = Multivectord::vector(w.signature(), Eigen::VectorXd(u.imag()));
    return with_sign_convention(normalized(outer_product(a, b)));
  }
  throw DomainError("no 2 pi / h eigenplane found");
}

Multivectord coxeter_plane(const Multivectord& w) { return coxeter_plane(w, coxeter_number(w)); }

Multivectord plane_normal(const Multivectord& plane) {
  if (plane.signature().dim() != 3) throw DomainError("plane normal is defined in 3D only");
  return normalized(grade_project(plane * pseudoscalar(plane.signature()), 1));
}

std::vector<int> exponents(const Multivectord& w, int h, double angle_tol) {
  const Eigen::MatrixXd m = action_matrix(w);
  const Eigen::VectorXcd eigenvalues = Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
  std::vector<int> out;
  for (const auto& lambda : eigenvalues) {
    if (std::abs(lambda - 1.0) < angle_tol) continue;
    double angle = std::arg(lambda);
    if (angle < 0) angle += kTwoPi;
    const int mexp = static_cast<int>(std::lround(angle * h / kTwoPi));
    if (std::abs(angle - kTwoPi * mexp / h) > angle_tol || mexp <= 0 || mexp >= h) {
      throw DomainError("eigenvalue angle is not a multiple of 2 pi / h");
    }
    out.push_back(mexp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Multivectord, Multivectord> plane_basis(const Multivectord& plane) {
  const Signature& sig = plane.signature();
  if (!is_grade(plane, 2, 1e-9)) throw DomainError("plane is not a bivector");
  const Multivectord unit = normalized(plane);
  const Multivectord inv = reverse(unit);
  std::optional<Multivectord> best;
  double best_norm = 0.0;
  for (int i = 0; i < sig.dim(); ++i) {
    const Multivectord contraction = grade_project(Multivectord::basis(sig, i) * unit, 1);
    const Multivectord projected = grade_project(contraction * inv, 1);
    const double n = std::sqrt(std::max(0.0, norm_squared(projected)));
    if (n > best_norm + 1e-12) {
      best_norm = n;
      best = projected;
    }
  }
  if (!best) throw DomainError("degenerate plane");
  const Multivectord u1 = *best / best_norm;
  const Multivectord u2 = grade_project(u1 * unit, 1);
  return {u1, u2};
}

std::vector<Eigen::Vector2d> project_to_plane(std::span<const Multivectord> points,
                                              const Multivectord& plane) {
  const auto [u1, u2] = plane_basis(plane);
  std::vector<Eigen::Vector2d> out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(dot(p, u1), dot(p, u2));
  return out;
}

OrbitReport plane_orbit_decomposition(const Multivectord& w, const Multivectord& v, double tol) {
  const Versord versor = Versord::from(w);
  OrbitReport report;
  report.points.push_back(v);
  Multivectord x = sandwich(v, versor);
  while (!approx_equal(x, v, tol)) {
    report.points.push_back(x);
    if (report.points.size() > 1000) throw DomainError("orbit does not close");
    x = sandwich(x, versor);
  }
  const int h = coxeter_number(w);
  if (w.signature().dim() == 2) {
    report.in_plane = true;
    return report;
  }
  if (h <= 2) return report;
  const auto [u1, u2] = plane_basis(coxeter_plane(w, h));
  const double a = dot(v, u1);
  const double b = dot(v, u2);
  const double vv = dot(v, v);
  report.in_plane = std::abs(vv - a * a - b * b) <= tol * std::max(1.0, vv);
  report.normal = std::abs(a) <= tol && std::abs(b) <= tol;
  return report;
}

CoxeterDescriptor describe_coxeter(std::span<const Multivectord> simple) {
  CoxeterDescriptor d;
  d.versor = coxeter_versor(simple);
  d.parity = Versord::from(d.versor).parity();
  d.h = coxeter_number(d.versor);
  if (d.h > 2) {
    d.plane = coxeter_plane(d.versor, d.h);
    if (d.versor.signature().dim() == 3) d.normal = plane_normal(*d.plane);
  }
  d.exponents = exponents(d.versor, d.h);
  return d;
}

}  // namespace cliffcox
