#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffcox/multivector.hpp"
#include "cliffcox/root_system.hpp"

namespace cliffcox {

enum class ParityClass { EvenOnly, Mixed };

inline const char* to_string(ParityClass p) { return p == ParityClass::EvenOnly ? "even" : "mixed"; }

/// Finite group of unit versors.  R and -R are distinct elements, so a spin
/// group is the double cover of the rotation group it realises.
struct VersorGroup {
  std::string source;
  ParityClass parity_class = ParityClass::EvenOnly;
  std::vector<Multivectord> elements;

  std::size_t order() const { return elements.size(); }
  std::optional<std::size_t> index_of(const Multivectord& x, double tol = kDedupTolerance) const;
};

struct OrthogonalGroup {
  enum class Chirality { RotationOnly, Full };
  Chirality chirality = Chirality::Full;
  std::vector<Eigen::MatrixXd> matrices;

  std::size_t order() const { return matrices.size(); }
};

/// element order k -> number of elements of that order
using OrderSpectrum = std::map<int, std::size_t>;

/// Close `seeds` under the geometric product: breadth-first, each new element
/// multiplied against the whole set on both sides.  Elements end up sorted
/// lexicographically on their rounded coefficients.
VersorGroup close_versors(std::vector<Multivectord> seeds, ParityClass parity_class,
                          std::string source, double tol = kDedupTolerance,
                          std::size_t limit = 10000);

/// All rotors a_i a_j over pairs of roots, closed under multiplication.
VersorGroup generate_spin_group(const RootSystem& rs, double tol = kDedupTolerance);

/// The roots themselves closed under multiplication (odd and even versors).
VersorGroup generate_pin_group(const RootSystem& rs, double tol = kDedupTolerance);

/// Matrix of v -> (-1)^parity reverse(A) v A on the basis vectors (columns are
/// images).  Note the composition rule: action_matrix(A B) = M(B) M(A).
Eigen::MatrixXd action_matrix(const Multivectord& versor);

OrthogonalGroup realize_orthogonal(const VersorGroup& vg, double tol = kDedupTolerance);

/// Smallest k >= 1 with A^k = 1, or nullopt if none up to `bound`.
std::optional<int> element_order(const Multivectord& a, int bound = 1000,
                                 double tol = kDedupTolerance);

OrderSpectrum order_spectrum(const VersorGroup& vg);

/// One element from each {A, -A} pair, in group order.
std::vector<Multivectord> sign_representatives(const VersorGroup& vg, double tol = kDedupTolerance);

struct GroupFailure {
  std::string axiom;  // closure | identity | inverse | associativity | unit
  std::vector<std::size_t> witnesses;
  std::string detail;
};

struct VerifyOptions {
  bool exhaustive_associativity = false;
  std::size_t associativity_samples = 1000;
  std::uint64_t seed = 0x5eed;
  double tol = kDedupTolerance;
};

/// Group-axiom check plus isomorphism evidence.  The binary-group label is
/// assigned only when order, order spectrum and centre size all agree with
/// the reference for Q, 2T, 2O or 2I; it is evidence, not an isomorphism proof.
struct GroupReport {
  bool passed = false;
  std::size_t order = 0;
  std::optional<std::string> label;
  std::size_t center_size = 0;
  OrderSpectrum spectrum;
  std::size_t associativity_checks = 0;
  bool associativity_exhaustive = false;
  std::vector<GroupFailure> failures;
};

GroupReport verify_group(const VersorGroup& vg, const VerifyOptions& options = {});

/// Reference order spectra of the binary polyhedral groups, keyed by label.
const std::map<std::string, OrderSpectrum>& binary_group_spectra();

}  // namespace cliffcox
