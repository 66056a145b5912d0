#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffcox {

/// Raised for every contract violation detected at run time (bad signature,
/// null mirror, non-unit versor, non-terminating closure, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis blade as a bitmask: bit i set means e_{i+1} is a factor.  Factors are
/// always taken in ascending index order, so 0b011 is e1e2 and 0b101 is e1e3.
using Blade = std::uint32_t;

constexpr int grade(Blade b) { return std::popcount(b); }

/// Metric signature of Cl(p,q).  Basis vector i (zero based) squares to +1
/// for i < p and to -1 otherwise.  The conformal algebra is (4,1) with
/// e at index 3 and e-bar at index 4.
class Signature {
 public:
  static constexpr int kMaxDim = 5;

  constexpr Signature() = default;
  constexpr Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0 || p + q > kMaxDim) {
      throw DomainError("signature (" + std::to_string(p) + "," + std::to_string(q) +
                        ") outside 0 <= p+q <= 5");
    }
  }

  constexpr int p() const { return p_; }
  constexpr int q() const { return q_; }
  constexpr int dim() const { return p_ + q_; }
  constexpr int size() const { return 1 << dim(); }
  constexpr int metric(int i) const { return i < p_ ? 1 : -1; }

  friend constexpr bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_ = 3;
  int q_ = 0;
};

inline constexpr Signature kEuclidean2{2, 0};
inline constexpr Signature kEuclidean3{3, 0};
inline constexpr Signature kEuclidean4{4, 0};
inline constexpr Signature kConformal{4, 1};

/// Sign s in e_a e_b = s e_{a^b}: reordering swaps plus metric contractions.
constexpr int blade_product_sign(Blade a, Blade b, const Signature& sig) {
  int swaps = 0;
  for (Blade rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  int sign = (swaps & 1) ? -1 : 1;
  for (Blade common = a & b; common != 0; common &= common - 1) {
    sign *= sig.metric(std::countr_zero(common));
  }
  return sign;
}

/// (-1)^(k(k-1)/2): the sign reversal applies to a grade-k blade.
constexpr int reverse_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }

}  // namespace cliffcox
