#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cliffcox/signature.hpp"

namespace cliffcox {

/// Dense multivector of Cl(p,q): one coefficient per basis blade, indexed by
/// the blade bitmask.  At most 32 coefficients, so storage never allocates.
template <typename Scalar>
class Multivector {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, 32, 1>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit Multivector(const Signature& sig = kEuclidean3)
      : sig_(sig), coeffs_(Coeffs::Zero(sig.size())) {}

  template <typename Derived>
  Multivector(const Signature& sig, const Eigen::MatrixBase<Derived>& coeffs)
      : sig_(sig), coeffs_(coeffs) {
    if (coeffs_.size() != sig.size()) {
      throw DomainError("coefficient count " + std::to_string(coeffs_.size()) +
                        " does not match 2^" + std::to_string(sig.dim()));
    }
  }

  static Multivector scalar(const Signature& sig, Scalar s) { return blade(sig, 0, s); }

  static Multivector blade(const Signature& sig, Blade b, Scalar value = Scalar(1)) {
    if (b >= static_cast<Blade>(sig.size())) throw DomainError("blade outside algebra");
    Multivector m(sig);
    m.coeffs_[b] = value;
    return m;
  }

  /// Basis vector e_{i+1}.
  static Multivector basis(const Signature& sig, int i) { return blade(sig, Blade{1} << i); }

  /// Grade-1 multivector from components; missing trailing components are zero.
  template <typename Derived>
  static Multivector vector(const Signature& sig, const Eigen::MatrixBase<Derived>& v) {
    if (v.size() > sig.dim()) throw DomainError("vector has more components than the algebra");
    Multivector m(sig);
    for (Eigen::Index i = 0; i < v.size(); ++i) m.coeffs_[Blade{1} << i] = v[i];
    return m;
  }

  const Signature& signature() const { return sig_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Coeffs& coeffs() { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  Scalar operator[](Blade b) const { return coeffs_[b]; }
  Scalar& operator[](Blade b) { return coeffs_[b]; }

  Scalar scalar_part() const { return coeffs_[0]; }

  /// Grade-1 components (e1, e2, ...) as a plain vector.
  Vector vector_part() const {
    Vector v(sig_.dim());
    for (int i = 0; i < sig_.dim(); ++i) v[i] = coeffs_[Blade{1} << i];
    return v;
  }

  bool all_finite() const { return coeffs_.allFinite(); }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  Multivector& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }
  Multivector& operator/=(Scalar s) {
    coeffs_ /= s;
    return *this;
  }

  void require_same(const Multivector& o) const {
    if (!(sig_ == o.sig_)) throw DomainError("signature mismatch");
  }

  template <typename NewScalar>
  Multivector<NewScalar> cast() const {
    return Multivector<NewScalar>(sig_, coeffs_.template cast<NewScalar>());
  }

 private:
  Signature sig_;
  Coeffs coeffs_;
};

using Multivectord = Multivector<double>;
using Multivectorf = Multivector<float>;

template <typename S>
Multivector<S> operator+(Multivector<S> a, const Multivector<S>& b) {
  return a += b;
}
template <typename S>
Multivector<S> operator-(Multivector<S> a, const Multivector<S>& b) {
  return a -= b;
}
template <typename S>
Multivector<S> operator-(Multivector<S> a) {
  a.coeffs() = -a.coeffs();
  return a;
}
template <typename S>
Multivector<S> operator*(Multivector<S> a, S s) {
  return a *= s;
}
template <typename S>
Multivector<S> operator*(S s, Multivector<S> a) {
  return a *= s;
}
template <typename S>
Multivector<S> operator/(Multivector<S> a, S s) {
  return a /= s;
}

template <typename S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  a.require_same(b);
  const Signature& sig = a.signature();
  Multivector<S> out(sig);
  const Blade n = static_cast<Blade>(sig.size());
  for (Blade i = 0; i < n; ++i) {
    const S ai = a[i];
    if (ai == S(0)) continue;
    for (Blade j = 0; j < n; ++j) {
      const S bj = b[j];
      if (bj == S(0)) continue;
      const S term = ai * bj;
      if (blade_product_sign(i, j, sig) > 0) {
        out[i ^ j] += term;
      } else {
        out[i ^ j] -= term;
      }
    }
  }
  return out;
}

template <typename S>
Multivector<S> operator*(const Multivector<S>& a, const Multivector<S>& b) {
  return geometric_product(a, b);
}

/// Outer (wedge) product: only blade pairs with no common factor contribute.
template <typename S>
Multivector<S> outer_product(const Multivector<S>& a, const Multivector<S>& b) {
  a.require_same(b);
  const Signature& sig = a.signature();
  Multivector<S> out(sig);
  const Blade n = static_cast<Blade>(sig.size());
  for (Blade i = 0; i < n; ++i) {
    if (a[i] == S(0)) continue;
    for (Blade j = 0; j < n; ++j) {
      if ((i & j) != 0 || b[j] == S(0)) continue;
      out[i ^ j] += S(blade_product_sign(i, j, sig)) * a[i] * b[j];
    }
  }
  return out;
}

template <typename S>
Multivector<S> reverse(Multivector<S> a) {
  for (Blade i = 0; i < static_cast<Blade>(a.size()); ++i) {
    if (reverse_sign(grade(i)) < 0) a[i] = -a[i];
  }
  return a;
}

/// Grade involution: odd-grade blades change sign.
template <typename S>
Multivector<S> grade_involution(Multivector<S> a) {
  for (Blade i = 0; i < static_cast<Blade>(a.size()); ++i) {
    if (grade(i) & 1) a[i] = -a[i];
  }
  return a;
}

/// Zero for k outside [0, p+q].
template <typename S>
Multivector<S> grade_project(Multivector<S> a, int k) {
  for (Blade i = 0; i < static_cast<Blade>(a.size()); ++i) {
    if (grade(i) != k) a[i] = S(0);
  }
  return a;
}

template <typename S>
Multivector<S> even_part(const Multivector<S>& a) {
  return (a + grade_involution(a)) / S(2);
}

template <typename S>
Multivector<S> odd_part(const Multivector<S>& a) {
  return (a - grade_involution(a)) / S(2);
}

/// Largest coefficient magnitude outside grade k.
template <typename S>
S off_grade_magnitude(const Multivector<S>& a, int k) {
  S m(0);
  for (Blade i = 0; i < static_cast<Blade>(a.size()); ++i) {
    if (grade(i) != k) m = std::max(m, std::abs(a[i]));
  }
  return m;
}

template <typename S>
bool is_grade(const Multivector<S>& a, int k, S tol) {
  return off_grade_magnitude(a, k) <= tol;
}

/// Max componentwise difference; infinite on signature mismatch.
template <typename S>
S max_abs_diff(const Multivector<S>& a, const Multivector<S>& b) {
  if (!(a.signature() == b.signature())) return std::numeric_limits<S>::infinity();
  return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

template <typename S>
bool approx_equal(const Multivector<S>& a, const Multivector<S>& b, S tol) {
  return max_abs_diff(a, b) <= tol;
}

/// Scalar part of a * reverse(a); the quadratic form v.v on vectors.
template <typename S>
S norm_squared(const Multivector<S>& a) {
  return geometric_product(a, reverse(a)).scalar_part();
}

/// Scalar product of two vectors (scalar part of ab).
template <typename S>
S dot(const Multivector<S>& a, const Multivector<S>& b) {
  return geometric_product(a, b).scalar_part();
}

/// Inverse of a versor, reverse(a) / (a reverse(a)).
template <typename S>
Multivector<S> versor_inverse(const Multivector<S>& a, S tol = S(1e-12)) {
  const Multivector<S> aa = geometric_product(a, reverse(a));
  const S s = aa.scalar_part();
  if (std::abs(s) <= tol || off_grade_magnitude(aa, 0) > std::max(tol, S(1e-9) * std::abs(s))) {
    throw DomainError("multivector is not an invertible versor");
  }
  return reverse(a) / s;
}

template <typename S>
Multivector<S> power(const Multivector<S>& a, int k) {
  if (k < 0) return power(versor_inverse(a), -k);
  Multivector<S> out = Multivector<S>::scalar(a.signature(), S(1));
  for (int i = 0; i < k; ++i) out = geometric_product(out, a);
  return out;
}

/// Copies blades bit-for-bit into a larger algebra (e.g. Cl(3,0) -> Cl(4,1)).
/// The shared basis vectors must have the same metric in both signatures.
template <typename S>
Multivector<S> embed_into(const Multivector<S>& a, const Signature& target) {
  const Signature& src = a.signature();
  if (target.dim() < src.dim()) throw DomainError("target algebra is smaller than source");
  for (int i = 0; i < src.dim(); ++i) {
    if (src.metric(i) != target.metric(i)) throw DomainError("embedding changes the metric");
  }
  Multivector<S> out(target);
  for (Blade i = 0; i < static_cast<Blade>(src.size()); ++i) out[i] = a[i];
  return out;
}

/// Reflection of vector v in the hyperplane orthogonal to alpha: -alpha v alpha^-1.
/// For unit alpha this is -alpha v alpha.
template <typename S>
Multivector<S> reflect(const Multivector<S>& v, const Multivector<S>& alpha, S tol = S(1e-9)) {
  v.require_same(alpha);
  if (!is_grade(v, 1, tol)) throw DomainError("reflect: v is not a vector");
  if (!is_grade(alpha, 1, tol)) throw DomainError("reflect: alpha is not a vector");
  const S a2 = dot(alpha, alpha);
  if (std::abs(a2) <= tol) throw DomainError("reflect: null mirror vector");
  return -(alpha * v * alpha) / a2;
}

enum class Parity { Even, Odd };

inline int parity_sign(Parity p) { return p == Parity::Even ? 1 : -1; }
inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Unit versor with its parity.  Construction classifies the parity from the
/// grade content and rejects mixed-parity or non-unit input.
template <typename S>
class Versor {
 public:
  static Versor from(const Multivector<S>& mv, S tol = S(1e-9)) {
    const S odd = odd_part(mv).coeffs().cwiseAbs().maxCoeff();
    const S even = even_part(mv).coeffs().cwiseAbs().maxCoeff();
    Parity parity;
    if (odd <= tol) {
      parity = Parity::Even;
    } else if (even <= tol) {
      parity = Parity::Odd;
    } else {
      throw DomainError("versor has mixed even and odd parts");
    }
    const Multivector<S> unit = geometric_product(mv, reverse(mv));
    if (std::abs(unit.scalar_part() - S(1)) > tol || off_grade_magnitude(unit, 0) > tol) {
      throw DomainError("versor is not unit: A reverse(A) != 1");
    }
    return Versor(mv, parity);
  }

  const Multivector<S>& mv() const { return mv_; }
  Parity parity() const { return parity_; }
  const Signature& signature() const { return mv_.signature(); }

 private:
  Versor(const Multivector<S>& mv, Parity parity) : mv_(mv), parity_(parity) {}
  Multivector<S> mv_;
  Parity parity_;
};

using Versord = Versor<double>;

/// reverse(A) x A with no parity sign.
template <typename S>
Multivector<S> raw_sandwich(const Multivector<S>& x, const Multivector<S>& a) {
  return reverse(a) * x * a;
}

/// Orthogonal action of a unit versor: reverse(A) x A for even A and
/// reverse(A) involute(x) A for odd A.  On vectors this is the +/- rule
/// v -> (-1)^parity reverse(A) v A.
template <typename S>
Multivector<S> sandwich(const Multivector<S>& x, const Versor<S>& a) {
  x.require_same(a.mv());
  if (a.parity() == Parity::Even) return raw_sandwich(x, a.mv());
  return raw_sandwich(grade_involution(x), a.mv());
}

template <typename S>
Multivector<S> sandwich(const Multivector<S>& x, const Multivector<S>& a, S tol = S(1e-9)) {
  return sandwich(x, Versor<S>::from(a, tol));
}

}  // namespace cliffcox
