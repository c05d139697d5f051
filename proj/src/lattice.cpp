#include "toric/lattice.hpp"

#include "toric/error.hpp"

namespace toric {

bool LatticeVector::is_primitive() const {
  Integer g = gcd(a, b);
  return g == 1;
}

std::string to_string(const LatticeVector& v) {
  return "(" + v.a.get_str() + "," + v.b.get_str() + ")";
}

Primitivized primitivize(const LatticeVector& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "cannot primitivize the zero vector");
  Integer g = gcd(v.a, v.b);  // gmp gcd is non-negative
  return {LatticeVector(Integer(v.a / g), Integer(v.b / g)), g};
}

Integer det2(const LatticeVector& u, const LatticeVector& v) { return u.a * v.b - v.a * u.b; }

Integer dot(const LatticeVector& u, const LatticeVector& v) { return u.a * v.a + u.b * v.b; }

UnimodularMap UnimodularMap::from_rows(Integer m11, Integer m12, Integer m21, Integer m22) {
  UnimodularMap m(std::move(m11), std::move(m12), std::move(m21), std::move(m22));
  if (m.det() != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "unimodular map must have determinant +1, got " + m.det().get_str());
  }
  return m;
}

LatticeVector UnimodularMap::apply(const LatticeVector& v) const {
  return {Integer(m11_ * v.a + m12_ * v.b), Integer(m21_ * v.a + m22_ * v.b)};
}

UnimodularMap UnimodularMap::inverse() const {
  return UnimodularMap(m22_, Integer(-m12_), Integer(-m21_), m11_);
}

UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g) {
  return UnimodularMap(Integer(f.m11_ * g.m11_ + f.m12_ * g.m21_),
                       Integer(f.m11_ * g.m12_ + f.m12_ * g.m22_),
                       Integer(f.m21_ * g.m11_ + f.m22_ * g.m21_),
                       Integer(f.m21_ * g.m12_ + f.m22_ * g.m22_));
}

UnimodularMap unimodular_to_e1(const LatticeVector& v) {
  if (!v.is_primitive()) {
    throw Error(ErrorCode::NotPrimitive, "vector " + to_string(v) + " is not primitive");
  }
  const Integer& a = v.a;
  const Integer& b = v.b;
  Integer x, y;
  if (b == 0) {
    x = a;  // a = +-1
    y = 0;
  } else {
    // All solutions: x = x0 + k*b. Reduce x into (-|b|/2, |b|/2], ties toward x >= 0.
    Integer g, x0, y0;
    mpz_gcdext(g.get_mpz_t(), x0.get_mpz_t(), y0.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer m = abs(b);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x0.get_mpz_t(), m.get_mpz_t());  // 0 <= r < m
    if (2 * r > m) r -= m;
    x = r;
    y = (1 - x * a) / b;
  }
  return UnimodularMap::from_rows(x, y, Integer(-b), a);
}

}  // namespace toric
