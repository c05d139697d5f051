#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A complete 2-dimensional fan: primitive rays lambda_1, ..., lambda_{n+2}
/// in counterclockwise order, winding exactly once around the origin.
///
/// Ray labels are 1-based and cyclic: ray(n+3) is ray(1) and ray(0) is
/// ray(n+2). Cone i is spanned by ray(i) and ray(i+1).
class Fan {
 public:
  std::size_t size() const { return rays_.size(); }
  /// Number of divisors in the basis, i.e. size() - 2.
  std::size_t n() const { return rays_.size() - 2; }

  /// Accepts any integer label; reduced cyclically.
  const LatticeVector& ray(long label) const;
  const std::vector<LatticeVector>& rays() const { return rays_; }

  friend bool operator==(const Fan& f, const Fan& g) { return f.rays_ == g.rays_; }

 private:
  friend Fan validate_fan(std::vector<LatticeVector> raw_rays);
  explicit Fan(std::vector<LatticeVector> rays) : rays_(std::move(rays)) {}

  std::vector<LatticeVector> rays_;
};

/// Checks, in order: at least 3 rays (TooFewRays), each ray primitive
/// (NotPrimitive), rays pairwise distinct (DuplicateRay), det2(ray i, ray i+1)
/// > 0 cyclically (NotCounterclockwise), winding number one (NotComplete).
Fan validate_fan(std::vector<LatticeVector> raw_rays);

/// Lattice polygon with counterclockwise vertices.
struct Polygon {
  std::vector<LatticeVector> vertices;
};

/// Primitive outward normals of the edges, one per edge in vertex order. Edge
/// k runs from vertex k to vertex k+1.
Fan normal_fan(const Polygon& p);

/// det2(ray i, ray i+1); label in 1..n+2.
Integer multiplicity(const Fan& f, std::size_t i);
bool is_smooth_cone(const Fan& f, std::size_t i);
bool has_smooth_vertex(const Fan& f);

/// Integer dependence c_prev * ray(i-1) + c_mid * ray(i) + c_next * ray(i+1) = 0.
///
/// Values produced by wall_relation() are coprime with c_prev > 0 and
/// c_next > 0. The struct itself carries no invariant, so scaled relations can
/// be fed to self_intersection() directly.
struct WallRelation {
  Integer c_prev;
  Integer c_mid;
  Integer c_next;

  friend bool operator==(const WallRelation& x, const WallRelation& y) {
    return x.c_prev == y.c_prev && x.c_mid == y.c_mid && x.c_next == y.c_next;
  }
};

WallRelation wall_relation(const Fan& f, std::size_t i);

struct Normalized {
  Fan fan;
  UnimodularMap map;
  /// new ray(k) = map(old ray(k + shift)), labels cyclic.
  std::size_t shift = 0;
};

/// Relabels cyclically so that `pivot` becomes ray n+1, then applies
/// unimodular_to_e1 of the pivot ray to every ray. Afterwards ray(n+1) = (1,0)
/// and ray(n+2).b > 0.
Normalized normalize(const Fan& f, std::size_t pivot);

/// Same as normalize() with pivot n+1.
Normalized normalize(const Fan& f);

bool is_normalized(const Fan& f);

/// Applies a det +1 map to every ray; labels unchanged.
Fan transform(const Fan& f, const UnimodularMap& m);

/// Normalizes at the first smooth cone and then shears so that ray(n+1) = (1,0)
/// and ray(n+2) = (0,1). Throws SmoothVertexRequired when every cone is
/// singular.
Normalized smooth_vertex_form(const Fan& f);

/// Deterministic in (ray_count, coord_bound, seed). Samples distinct primitive
/// vectors in [-coord_bound, coord_bound]^2, sorts them by angle, rejects
/// incomplete configurations, then normalizes at a seed-chosen pivot so
/// that ray(ray_count - 1) = (1,0). Gives up with GenerationFailed after
/// kMaxGenerationAttempts rejected configurations.
Fan random_complete_fan(std::size_t ray_count, std::int64_t coord_bound, std::uint64_t seed);

inline constexpr int kMaxGenerationAttempts = 10000;

}  // namespace toric
