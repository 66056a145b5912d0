#include "cliffcox/versor_group.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <random>

namespace cliffcox {

namespace {

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

bool is_scalar_one(const Multivectord& x, double tol) {
  return std::abs(x.scalar_part() - 1.0) <= tol && off_grade_magnitude(x, 0) <= tol;
}

}  // namespace

std::optional<std::size_t> VersorGroup::index_of(const Multivectord& x, double tol) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (approx_equal(elements[i], x, tol)) return i;
  }
  return std::nullopt;
}

VersorGroup close_versors(std::vector<Multivectord> seeds, ParityClass parity_class,
                          std::string source, double tol, std::size_t limit) {
  VersorGroup vg{std::move(source), parity_class, {}};
  PointSet<double> seen(tol);
  std::vector<Multivectord>& elems = vg.elements;
  auto add = [&](const Multivectord& x) {
    if (!seen.insert(Eigen::VectorXd(x.coeffs())).second) return;
    elems.push_back(x);
    if (elems.size() > limit) {
      throw DomainError("versor closure exceeded " + std::to_string(limit) + " elements");
    }
  };
  for (const auto& s : seeds) add(s);

  std::size_t frontier = 0;
  while (frontier < elems.size()) {
    const std::size_t end = elems.size();
    for (std::size_t i = frontier; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        const Multivectord a = elems[i];
        const Multivectord b = elems[j];
        add(a * b);
        add(b * a);
      }
    }
    frontier = end;
  }

  std::sort(elems.begin(), elems.end(), [](const Multivectord& a, const Multivectord& b) {
    return rounded_lex_less(a.coeffs(), b.coeffs());
  });
  return vg;
}

VersorGroup generate_spin_group(const RootSystem& rs, double tol) {
  std::vector<Multivectord> seeds;
  seeds.reserve(rs.roots.size() * rs.roots.size());
  for (const auto& a : rs.roots) {
    for (const auto& b : rs.roots) seeds.push_back(a * b);
  }
  return close_versors(std::move(seeds), ParityClass::EvenOnly, rs.group, tol);
}

VersorGroup generate_pin_group(const RootSystem& rs, double tol) {
  return close_versors(rs.roots, ParityClass::Mixed, rs.group, tol);
}

Eigen::MatrixXd action_matrix(const Multivectord& versor) {
  const Versord v = Versord::from(versor);
  const Signature& sig = versor.signature();
  Eigen::MatrixXd m(sig.dim(), sig.dim());
  for (int j = 0; j < sig.dim(); ++j) {
    m.col(j) = sandwich(Multivectord::basis(sig, j), v).vector_part();
  }
  return m;
}

OrthogonalGroup realize_orthogonal(const VersorGroup& vg, double tol) {
  OrthogonalGroup og;
  og.chirality = vg.parity_class == ParityClass::EvenOnly ? OrthogonalGroup::Chirality::RotationOnly
                                                          : OrthogonalGroup::Chirality::Full;
  PointSet<double> seen(tol);
  for (const auto& a : vg.elements) {
    Eigen::MatrixXd m = action_matrix(a);
    if (!seen.insert(flatten(m)).second) continue;
    const Eigen::Index d = m.rows();
    if ((m.transpose() * m - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
      throw DomainError("realised matrix is not orthogonal");
    }
    if (og.chirality == OrthogonalGroup::Chirality::RotationOnly && m.determinant() < 0) {
      throw DomainError("even versor realised an improper rotation");
    }
    og.matrices.push_back(std::move(m));
  }
  return og;
}

std::optional<int> element_order(const Multivectord& a, int bound, double tol) {
  Multivectord p = a;
  for (int k = 1; k <= bound; ++k) {
    if (is_scalar_one(p, tol)) return k;
    p = p * a;
  }
  return std::nullopt;
}

OrderSpectrum order_spectrum(const VersorGroup& vg) {
  OrderSpectrum spectrum;
  for (const auto& a : vg.elements) {
    const auto k = element_order(a);
    if (!k) throw DomainError("element of infinite (or > 1000) order in a finite group");
    ++spectrum[*k];
  }
  return spectrum;
}

std::vector<Multivectord> sign_representatives(const VersorGroup& vg, double tol) {
  std::vector<Multivectord> reps;
  PointSet<double> seen(tol);
  for (const auto& a : vg.elements) {
    if (seen.contains(Eigen::VectorXd(a.coeffs())) || seen.contains(Eigen::VectorXd((-a).coeffs()))) {
      continue;
    }
    seen.insert(Eigen::VectorXd(a.coeffs()));
    reps.push_back(a);
  }
  return reps;
}

const std::map<std::string, OrderSpectrum>& binary_group_spectra() {
  static const std::map<std::string, OrderSpectrum> table = {
      {"Q", {{1, 1}, {2, 1}, {4, 6}}},
      {"2T", {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}},
      {"2O", {{1, 1}, {2, 1}, {3, 8}, {4, 18}, {6, 8}, {8, 12}}},
      {"2I", {{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 24}, {6, 20}, {10, 24}}},
  };
  return table;
}

GroupReport verify_group(const VersorGroup& vg, const VerifyOptions& options) {
  GroupReport report;
  const auto& elems = vg.elements;
  const std::size_t n = elems.size();
  const double tol = options.tol;
  report.order = n;

  PointSet<double> set(tol);
  for (const auto& a : elems) set.insert(Eigen::VectorXd(a.coeffs()));
  auto lookup = [&](const Multivectord& x) { return set.find(Eigen::VectorXd(x.coeffs())); };

  if (n == 0) {
    report.failures.push_back({"identity", {}, "empty set"});
    return report;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Multivectord unit = elems[i] * reverse(elems[i]);
    if (!is_scalar_one(unit, tol)) {
      report.failures.push_back({"unit", {i}, "A reverse(A) != 1"});
      break;
    }
  }

  if (!lookup(Multivectord::scalar(elems.front().signature(), 1.0))) {
    report.failures.push_back({"identity", {}, "scalar 1 not in set"});
  }

  bool closure_ok = true;
  for (std::size_t i = 0; i < n && closure_ok; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!lookup(elems[i] * elems[j])) {
        report.failures.push_back({"closure", {i, j}, "product of elements i and j not in set"});
        closure_ok = false;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!lookup(reverse(elems[i]))) {
      report.failures.push_back({"inverse", {i}, "reverse of element i not in set"});
      break;
    }
  }

  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++report.associativity_checks;
    const Multivectord left = (elems[i] * elems[j]) * elems[k];
    const Multivectord right = elems[i] * (elems[j] * elems[k]);
    if (!approx_equal(left, right, tol)) {
      report.failures.push_back({"associativity", {i, j, k}, "(ab)c != a(bc)"});
      return false;
    }
    return true;
  };
  report.associativity_exhaustive = options.exhaustive_associativity;
  if (options.exhaustive_associativity) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k) ok = check_triple(i, j, k);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < options.associativity_samples; ++s) {
      if (!check_triple(pick(rng), pick(rng), pick(rng))) break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    bool central = true;
    for (std::size_t j = 0; j < n && central; ++j) {
      central = approx_equal(elems[i] * elems[j], elems[j] * elems[i], tol);
    }
    if (central) ++report.center_size;
  }

  bool finite_orders = true;
  for (const auto& a : elems) {
    const auto k = element_order(a, 1000, tol);
    if (!k) {
      finite_orders = false;
      continue;
    }
    ++report.spectrum[*k];
  }
  if (!finite_orders) report.failures.push_back({"order", {}, "element without finite order"});

  report.passed = report.failures.empty();
  if (report.passed && vg.parity_class == ParityClass::EvenOnly && report.center_size == 2) {
    for (const auto& [label, spectrum] : binary_group_spectra()) {
      if (spectrum == report.spectrum) report.label = label;
    }
  }
  return report;
}

}  // namespace cliffcox
