#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cliffcox {

inline constexpr double kDedupTolerance = 1e-9;
inline constexpr double kHashCell = 1e-6;

/// Insertion-ordered set of real vectors with tolerance-ball matching.
///
/// Points are bucketed by their coordinates rounded to a 1e-6 grid.  A lookup
/// also visits the neighbouring cell along every axis where the query lies
/// within `tol` of a cell boundary, so two points closer than `tol` (max norm)
/// are always matched even when rounding splits them.
template <typename Scalar>
class PointSet {
 public:
  using Point = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit PointSet(Scalar tol = Scalar(kDedupTolerance), Scalar cell = Scalar(kHashCell))
      : tol_(tol), cell_(cell) {}

  /// Index of the matching point, inserting `p` if none matches.
  std::pair<std::size_t, bool> insert(const Point& p) {
    if (auto hit = find(p)) return {*hit, false};
    const std::size_t index = points_.size();
    points_.push_back(p);
    buckets_[base_key(p)].push_back(index);
    return {index, true};
  }

  std::optional<std::size_t> find(const Point& p) const {
    Key key = base_key(p);
    std::vector<std::pair<std::size_t, std::int64_t>> ambiguous;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      const Scalar scaled = p[i] / cell_;
      const Scalar offset = scaled - std::round(scaled);
      if (std::abs(offset) > Scalar(0.5) - tol_ / cell_) {
        ambiguous.emplace_back(static_cast<std::size_t>(i), offset > 0 ? 1 : -1);
      }
    }
    // Visit every combination of base/neighbour cell along the ambiguous axes.
    const std::size_t combos = std::size_t{1} << std::min<std::size_t>(ambiguous.size(), 20);
    for (std::size_t mask = 0; mask < combos; ++mask) {
      Key probe = key;
      for (std::size_t b = 0; b < ambiguous.size(); ++b) {
        if (mask & (std::size_t{1} << b)) probe[ambiguous[b].first] += ambiguous[b].second;
      }
      auto it = buckets_.find(probe);
      if (it == buckets_.end()) continue;
      for (std::size_t index : it->second) {
        if (matches(points_[index], p)) return index;
      }
    }
    return std::nullopt;
  }

  bool contains(const Point& p) const { return find(p).has_value(); }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  Scalar tolerance() const { return tol_; }

  bool matches(const Point& a, const Point& b) const {
    return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol_;
  }

 private:
  using Key = std::vector<std::int64_t>;

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = k.size();
      for (std::int64_t v : k) {
        h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  Key base_key(const Point& p) const {
    Key k(static_cast<std::size_t>(p.size()));
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      k[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::llround(p[i] / cell_));
    }
    return k;
  }

  Scalar tol_;
  Scalar cell_;
  std::vector<Point> points_;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> buckets_;
};

/// Lexicographic order on coordinates rounded to the hash grid, ties broken
/// on the raw values.  Used to give closure results a run-independent order.
template <typename Derived1, typename Derived2>
bool rounded_lex_less(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b,
                      double cell = kHashCell) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    const auto ra = std::llround(a[i] / cell);
    const auto rb = std::llround(b[i] / cell);
    if (ra != rb) return ra < rb;
  }
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

/// True when `a` and `b` are the same set of points to `tol` (max norm).
template <typename Scalar>
bool same_point_set(const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& a,
                    const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& b,
                    Scalar tol = Scalar(kDedupTolerance)) {
  if (a.size() != b.size()) return false;
  PointSet<Scalar> set(tol);
  for (const auto& p : a) set.insert(p);
  if (set.size() != a.size()) return false;
  return std::all_of(b.begin(), b.end(), [&](const auto& p) { return set.contains(p); });
}

}  // namespace cliffcox
