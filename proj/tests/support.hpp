// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toric/chow.hpp"
#include "toric/fan.hpp"
#include "toric/rational_matrix.hpp"

namespace toric::testing {

inline Fan make_fan(std::initializer_list<std::pair<long, long>> rays) {
  std::vector<LatticeVector> v;
  for (auto [a, b] : rays) v.emplace_back(a, b);
  return validate_fan(std::move(v));
}

inline Fan paper_fan() { return make_fan({{-2, 1}, {-2, -1}, {1, -2}, {1, 0}, {0, 1}}); }
inline Fan p2_fan() { return make_fan({{-1, -1}, {1, 0}, {0, 1}}); }
inline Fan p1xp1_fan() { return make_fan({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}); }
inline Fan p112_fan() { return make_fan({{-1, -2}, {1, 0}, {0, 1}}); }
inline Fan half_twist_fan() { return make_fan({{-1, 0}, {0, -1}, {1, 0}, {1, 2}}); }

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

/// Intersection table from the linear relations alone: adjacent entries are
/// 1/det, nonadjacent entries vanish, and the diagonal entry is solved from
/// sum_k a_k m_ki = 0 (or the b-relation when a_i = 0). No wall relation is
/// involved.
inline RationalMatrix oracle_intersection_table(const Fan& f) {
  const long size = static_cast<long>(f.size());
  RationalMatrix m(f.size(), f.size());
  auto det = [](const LatticeVector& u, const LatticeVector& v) {
    return Integer(u.a * v.b - v.a * u.b);
  };
  for (long i = 1; i <= size; ++i) {
    const long nxt = i % size + 1;
    const Rational adj(Integer(1), det(f.ray(i), f.ray(i + 1)));
    Rational c = adj;
    c.canonicalize();
    m(i - 1, nxt - 1) = c;
    m(nxt - 1, i - 1) = c;
  }
  for (long i = 1; i <= size; ++i) {
    const long prv = (i + size - 2) % size + 1;
    const long nxt = i % size + 1;
    const LatticeVector& r = f.ray(i);
    const bool use_a = r.a != 0;
    const Integer& coeff = use_a ? r.a : r.b;
    const Integer& cp = use_a ? f.ray(prv).a : f.ray(prv).b;
    const Integer& cn = use_a ? f.ray(nxt).a : f.ray(nxt).b;
    Rational rest = Rational(cp) * m(prv - 1, i - 1);
    rest += Rational(cn) * m(nxt - 1, i - 1);
    m(i - 1, i - 1) = -rest / Rational(coeff);
  }
  return m;
}

/// The Appendix-style route: c_ij = g_i / (a b) * a'_i * b'_j * g_j, where
/// (a, b) = ray n+2 and (a'_k, b'_k) is kappa(ray k) divided by its content g_k.
/// Requires ray(n+1) = (1,0) and a != 0.
inline RationalMatrix oracle_kappa_cup(const Fan& f) {
  const std::size_t n = f.n();
  const LatticeVector& last = f.ray(static_cast<long>(n + 2));
  std::vector<Integer> ap(n), bp(n), g(n);
  for (std::size_t k = 0; k < n; ++k) {
    const LatticeVector& r = f.rays()[k];
    Integer x = last.b * r.a - last.a * r.b;
    Integer y = last.a * r.b;
    g[k] = gcd(x, y);
    ap[k] = x / g[k];
    bp[k] = y / g[k];
  }
  RationalMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational v(Integer(g[i] * ap[i] * bp[j] * g[j]), Integer(last.a * last.b));
      v.canonicalize();
      c(i, j) = v;
      c(j, i) = v;
    }
  }
  return c;
}

/// Counterclockwise-sorted complete fans from a seeded engine, independent of
/// random_complete_fan. Rays are left in angle order starting at an
/// arbitrary position (not normalized).
inline Fan oracle_random_fan(std::mt19937_64& rng, std::size_t ray_count, long bound) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  for (;;) {
    std::vector<std::pair<double, LatticeVector>> picked;
    while (picked.size() < ray_count) {
      LatticeVector v(coord(rng), coord(rng));
      if (!v.is_primitive()) continue;
      bool dup = false;
      for (const auto& p : picked) dup = dup || p.second == v;
      if (dup) continue;
      picked.emplace_back(std::atan2(v.b.get_d(), v.a.get_d()), v);
    }
    std::sort(picked.begin(), picked.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<LatticeVector> rays;
    for (auto& p : picked) rays.push_back(p.second);
    std::rotate(rays.begin(), rays.begin() + static_cast<long>(rng() % ray_count), rays.end());
    try {
      return validate_fan(rays);
    } catch (const std::exception&) {
      continue;
    }
  }
}

/// Random det +1 map as a product of elementary shears and quarter turns.
inline UnimodularMap random_unimodular(std::mt19937_64& rng, int steps = 6, long shear = 3) {
  std::uniform_int_distribution<long> k(-shear, shear);
  UnimodularMap m;
  for (int s = 0; s < steps; ++s) {
    switch (rng() % 3) {
      case 0: m = UnimodularMap::from_rows(1, k(rng), 0, 1) * m; break;
      case 1: m = UnimodularMap::from_rows(1, 0, k(rng), 1) * m; break;
      default: m = UnimodularMap::from_rows(0, -1, 1, 0) * m; break;
    }
  }
  return m;
}

}  // namespace toric::testing
