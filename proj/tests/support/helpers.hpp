#pragma once

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "cliffcox/multivector.hpp"
#include "cliffcox/point_set.hpp"

namespace testing {

using cliffcox::Multivectord;
using cliffcox::Signature;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240607);
  return engine;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Eigen::VectorXd random_vector(int dim, double scale = 1.0) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = uniform(-scale, scale);
  return v;
}

inline Eigen::VectorXd random_unit(int dim) {
  Eigen::VectorXd v;
  do {
    v = random_vector(dim);
  } while (v.norm() < 1e-3);
  return v.normalized();
}

inline Multivectord random_multivector(const Signature& sig) {
  Multivectord m(sig);
  for (int i = 0; i < sig.size(); ++i) m[static_cast<cliffcox::Blade>(i)] = uniform();
  return m;
}

inline Multivectord random_unit_vector_mv(const Signature& sig, int euclid_dim = -1) {
  const int d = euclid_dim < 0 ? sig.dim() : euclid_dim;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(sig.dim());
  v.head(d) = random_unit(d);
  return Multivectord::vector(sig, v);
}

/// Product of k random unit vectors of the Euclidean part.
inline Multivectord random_unit_versor(const Signature& sig, int k, int euclid_dim = -1) {
  Multivectord a = Multivectord::scalar(sig, 1.0);
  for (int i = 0; i < k; ++i) a = a * random_unit_vector_mv(sig, euclid_dim);
  return a;
}

// Independent oracles.  These use only linear algebra on coordinate vectors.

/// v - 2 (a.v)/(a.a) a
inline Eigen::VectorXd reflect_linear(const Eigen::VectorXd& v, const Eigen::VectorXd& a) {
  return v - 2.0 * a.dot(v) / a.dot(a) * a;
}

inline Eigen::MatrixXd reflection_matrix(const Eigen::VectorXd& a) {
  const Eigen::VectorXd u = a.normalized();
  return Eigen::MatrixXd::Identity(a.size(), a.size()) - 2.0 * u * u.transpose();
}

/// Close a set of matrices under multiplication (tolerance-ball dedup).
inline std::vector<Eigen::MatrixXd> matrix_closure(const std::vector<Eigen::MatrixXd>& gens) {
  std::vector<Eigen::MatrixXd> elems;
  auto known = [&](const Eigen::MatrixXd& m) {
    for (const auto& e : elems) {
      if ((e - m).cwiseAbs().maxCoeff() < 1e-9) return true;
    }
    return false;
  };
  for (const auto& g : gens) {
    if (!known(g)) elems.push_back(g);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const Eigen::MatrixXd& p : {Eigen::MatrixXd(elems[i] * elems[j]), Eigen::MatrixXd(elems[j] * elems[i])}) {
        if (!known(p)) elems.push_back(p);
      }
    }
  }
  return elems;
}

/// Close a set of vectors under reflect_linear (roots oracle).
inline std::vector<Eigen::VectorXd> linear_root_closure(std::vector<Eigen::VectorXd> roots) {
  auto known = [&](const Eigen::VectorXd& v) {
    for (const auto& r : roots) {
      if ((r - v).cwiseAbs().maxCoeff() < 1e-9) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const Eigen::VectorXd r = reflect_linear(roots[i], roots[j]);
      if (!known(r)) roots.push_back(r);
    }
  }
  return roots;
}

}  // namespace testing
