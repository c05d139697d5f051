#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace toric {

using Integer = mpz_class;

/// An element (a, b) of the rank-2 lattice N = Z^2.
struct LatticeVector {
  Integer a;
  Integer b;

  LatticeVector() = default;
  LatticeVector(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}
  LatticeVector(long a_, long b_) : a(a_), b(b_) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_primitive() const;

  friend bool operator==(const LatticeVector& u, const LatticeVector& v) {
    return u.a == v.a && u.b == v.b;
  }
  friend LatticeVector operator+(const LatticeVector& u, const LatticeVector& v) {
    return {Integer(u.a + v.a), Integer(u.b + v.b)};
  }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& v) {
    return {Integer(k * v.a), Integer(k * v.b)};
  }
};

std::string to_string(const LatticeVector& v);

struct Primitivized {
  LatticeVector primitive;
  Integer scale;  // >= 1
};

/// Splits v = scale * primitive with gcd(|primitive.a|, |primitive.b|) = 1.
/// Throws ErrorCode::ZeroVector for (0, 0).
Primitivized primitivize(const LatticeVector& v);

/// u.a * v.b - v.a * u.b
Integer det2(const LatticeVector& u, const LatticeVector& v);

Integer dot(const LatticeVector& u, const LatticeVector& v);

/// An orientation-preserving automorphism of Z^2, stored row-major:
///   [m11 m12]
///   [m21 m22]   with m11*m22 - m12*m21 = +1.
class UnimodularMap {
 public:
  UnimodularMap() : m11_(1), m12_(0), m21_(0), m22_(1) {}

  /// Throws ErrorCode::InvalidArgument unless the determinant is exactly +1.
  static UnimodularMap from_rows(Integer m11, Integer m12, Integer m21, Integer m22);
  static UnimodularMap identity() { return {}; }

  const Integer& m11() const { return m11_; }
  const Integer& m12() const { return m12_; }
  const Integer& m21() const { return m21_; }
  const Integer& m22() const { return m22_; }

  Integer det() const { return m11_ * m22_ - m12_ * m21_; }
  bool is_identity() const { return m11_ == 1 && m12_ == 0 && m21_ == 0 && m22_ == 1; }

  LatticeVector apply(const LatticeVector& v) const;
  UnimodularMap inverse() const;

  /// (f * g).apply(v) == f.apply(g.apply(v))
  friend UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g);
  friend bool operator==(const UnimodularMap& f, const UnimodularMap& g) {
    return f.m11_ == g.m11_ && f.m12_ == g.m12_ && f.m21_ == g.m21_ && f.m22_ == g.m22_;
  }

 private:
  UnimodularMap(Integer m11, Integer m12, Integer m21, Integer m22)
      : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)), m22_(std::move(m22)) {}

  Integer m11_, m12_, m21_, m22_;
};

/// Returns the det +1 map sending the primitive vector v to (1, 0).
///
/// Rows are (x, y) and (-b, a) where x*a + y*b = 1. Among all Bezout pairs the
/// one with minimal |x| is taken, ties broken toward x >= 0; when b = 0 the
/// coefficient y is free and set to 0. Throws ErrorCode::NotPrimitive.
UnimodularMap unimodular_to_e1(const LatticeVector& v);

}  // namespace toric
