#include "cliffcox/point_array.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cliffcox {

SeedPolytope SeedPolytope::regular_polygon(int k, std::string name) {
  if (k < 3) throw DomainError("polygon needs at least 3 vertices");
  SeedPolytope seed{name.empty() ? std::to_string(k) + "-gon" : std::move(name), {}};
  for (int i = 0; i < k; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / k;
    seed.vertices.push_back(Eigen::Vector2d(std::cos(angle), std::sin(angle)));
  }
  return seed;
}

TranslationSpec TranslationSpec::make(const Eigen::VectorXd& direction, double length) {
  if (!(length >= 0) || !std::isfinite(length)) throw DomainError("translation length must be >= 0");
  const double norm = direction.norm();
  if (!(norm > 1e-12) || !direction.allFinite()) throw DomainError("translation direction is zero");
  return {direction / norm, length};
}

namespace {

class ArrayBuilder {
 public:
  explicit ArrayBuilder(double tol) : seen_(tol) {}

  void add(const Eigen::VectorXd& p, Provenance from) {
    ++array_.candidate_count;
    const auto [index, inserted] = seen_.insert(p);
    if (inserted) {
      array_.points.push_back(p);
      array_.provenance.emplace_back();
    }
    array_.provenance[index].push_back(from);
  }

  PointArray take() { return std::move(array_); }

 private:
  PointSet<double> seen_;
  PointArray array_;
};

Eigen::VectorXd padded(const Eigen::VectorXd& v, Eigen::Index dim) {
  if (v.size() > dim) throw DomainError("seed dimension exceeds group dimension");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  out.head(v.size()) = v;
  return out;
}

}  // namespace

PointArray affine_orbit(const SeedPolytope& seed, const OrthogonalGroup& group,
                        const TranslationSpec& t, const AffineOptions& options) {
  ArrayBuilder builder(options.tol);
  if (seed.vertices.empty() || group.matrices.empty()) return builder.take();
  const Eigen::Index dim = group.matrices.front().rows();
  const Eigen::VectorXd shift = padded(t.vector(), dim);
  if (options.include_seed) {
    for (std::size_t v = 0; v < seed.vertices.size(); ++v) {
      builder.add(padded(seed.vertices[v], dim), {-1, static_cast<int>(v)});
    }
  }
  for (std::size_t g = 0; g < group.matrices.size(); ++g) {
    for (std::size_t v = 0; v < seed.vertices.size(); ++v) {
      builder.add(group.matrices[g] * (padded(seed.vertices[v], dim) + shift),
                  {static_cast<int>(g), static_cast<int>(v)});
    }
  }
  return builder.take();
}

PointArray affine_orbit_conformal(const SeedPolytope& seed, const VersorGroup& group,
                                  const TranslationSpec& t, const ConformalContext& ctx,
                                  const AffineOptions& options) {
  ArrayBuilder builder(options.tol);
  if (seed.vertices.empty() || group.elements.empty()) return builder.take();
  const Eigen::Index dim = group.elements.front().signature().dim();
  auto back = [&](const ConformalPoint& p) -> Eigen::VectorXd {
    return extract(p, ctx).head(dim);
  };
  if (options.include_seed) {
    for (std::size_t v = 0; v < seed.vertices.size(); ++v) {
      builder.add(back(embed(seed.vertices[v], ctx)), {-1, static_cast<int>(v)});
    }
  }
  std::vector<Versord> versors;
  for (const auto& a : sign_representatives(group)) versors.push_back(Versord::from(lift_versor(a)));

  const Eigen::VectorXd shift = t.vector();
  for (std::size_t g = 0; g < versors.size(); ++g) {
    for (std::size_t v = 0; v < seed.vertices.size(); ++v) {
      const ConformalPoint moved = translate(embed(seed.vertices[v], ctx), shift, ctx);
      builder.add(back(apply_versor(moved, versors[g])), {static_cast<int>(g), static_cast<int>(v)});
    }
  }
  return builder.take();
}

DegeneracyReport degeneracy_report(const PointArray& array, double tol) {
  DegeneracyReport r;
  r.points = array.size();
  r.candidates = array.candidate_count;
  r.degenerate = r.points < r.candidates;
  std::vector<double> radii;
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::size_t m = array.multiplicity(i);
    ++r.multiplicities[m];
    if (m > 1) ++r.degenerate_points;
    radii.push_back(array.points[i].norm());
  }
  std::sort(radii.begin(), radii.end());
  for (double radius : radii) {
    if (!r.rings.empty() && std::abs(radius - r.rings.back().radius) <= std::max(tol, 1e-9)) {
      ++r.rings.back().count;
    } else {
      r.rings.push_back({radius, 1});
    }
  }
  return r;
}

std::vector<SweepEntry> translation_sweep(const SeedPolytope& seed, const OrthogonalGroup& group,
                                          const Eigen::VectorXd& direction,
                                          const std::vector<double>& lengths,
                                          const AffineOptions& options) {
  std::vector<SweepEntry> out;
  out.reserve(lengths.size());
  for (double length : lengths) {
    if (!(length > 0)) throw DomainError("sweep lengths must be positive");
    const PointArray arr = affine_orbit(seed, group, TranslationSpec::make(direction, length), options);
    out.push_back({length, arr.size()});
  }
  return out;
}

double max_set_deviation(const PointArray& a, const PointArray& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& p : a.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b.points) {
      if (p.size() != q.size()) return std::numeric_limits<double>::infinity();
      best = std::min(best, (p - q).cwiseAbs().maxCoeff());
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace cliffcox
