#pragma once

#include <Eigen/Core>

#include <map>
#include <string>
#include <vector>

#include "cliffcox/conformal.hpp"
#include "cliffcox/point_set.hpp"
#include "cliffcox/versor_group.hpp"

namespace cliffcox {

struct SeedPolytope {
  std::string name;
  std::vector<Eigen::VectorXd> vertices;

  /// Unit-circumradius regular k-gon with a vertex at (1, 0).
  static SeedPolytope regular_polygon(int k, std::string name = {});
  static SeedPolytope pentagon() { return regular_polygon(5, "pentagon"); }
};

struct TranslationSpec {
  Eigen::VectorXd direction;  // unit
  double length = 0.0;

  /// Normalises `direction`; rejects a zero direction or a negative length.
  static TranslationSpec make(const Eigen::VectorXd& direction, double length);
  Eigen::VectorXd vector() const { return direction * length; }
};

/// Which group element moved which seed vertex onto a point.  A negative
/// group index marks an untranslated seed vertex (include_seed).
struct Provenance {
  int group_element = 0;
  int seed_vertex = 0;
};

struct PointArray {
  std::vector<Eigen::VectorXd> points;
  std::vector<std::vector<Provenance>> provenance;
  std::size_t candidate_count = 0;

  std::size_t size() const { return points.size(); }
  std::size_t multiplicity(std::size_t i) const { return provenance[i].size(); }
};

struct AffineOptions {
  bool include_seed = false;
  double tol = kDedupTolerance;
};

/// { g(v + t) : g in group, v in seed }, deduplicated with provenance.
PointArray affine_orbit(const SeedPolytope& seed, const OrthogonalGroup& group,
                        const TranslationSpec& t, const AffineOptions& options = {});

/// Same array built from conformal versors: each seed vertex is embedded,
/// moved by the translation rotor, acted on by every group versor (one per
/// +/- pair) and extracted.
PointArray affine_orbit_conformal(const SeedPolytope& seed, const VersorGroup& group,
                                  const TranslationSpec& t, const ConformalContext& ctx,
                                  const AffineOptions& options = {});

struct Ring {
  double radius = 0.0;
  std::size_t count = 0;
};

struct DegeneracyReport {
  std::size_t points = 0;
  std::size_t candidates = 0;
  std::size_t degenerate_points = 0;
  /// multiplicity -> number of points with that multiplicity
  std::map<std::size_t, std::size_t> multiplicities;
  /// |points| < candidates
  bool degenerate = false;
  /// Points grouped by distance from the origin, innermost first.
  std::vector<Ring> rings;
};

DegeneracyReport degeneracy_report(const PointArray& array, double tol = kDedupTolerance);

struct SweepEntry {
  double length = 0.0;
  std::size_t cardinality = 0;
};

std::vector<SweepEntry> translation_sweep(const SeedPolytope& seed, const OrthogonalGroup& group,
                                          const Eigen::VectorXd& direction,
                                          const std::vector<double>& lengths,
                                          const AffineOptions& options = {});

/// Largest distance from a point of one array to its nearest match in the
/// other (max norm); infinity if cardinalities differ.
double max_set_deviation(const PointArray& a, const PointArray& b);

}  // namespace cliffcox
