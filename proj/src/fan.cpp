#include "toric/fan.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "toric/error.hpp"

namespace toric {

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_plane(const LatticeVector& v) { return (v.b > 0 || (v.b == 0 && v.a > 0)) ? 0 : 1; }

// Strict order by angle in [0, 2 pi) measured from the positive a-axis.
bool angle_less(const LatticeVector& u, const LatticeVector& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return sgn(det2(u, v)) > 0;
}

std::string label(std::size_t i) { return std::to_string(i); }

void check_label(const Fan& f, std::size_t i) {
  if (i < 1 || i > f.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "ray label " + label(i) + " outside 1.." + label(f.size()), i);
  }
}

// Uniform integer in [lo, hi] from raw 64-bit draws; identical on every platform.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace

const LatticeVector& Fan::ray(long label) const {
  const long size = static_cast<long>(rays_.size());
  long k = (label - 1) % size;
  if (k < 0) k += size;
  return rays_[static_cast<std::size_t>(k)];
}

Fan validate_fan(std::vector<LatticeVector> raw_rays) {
  const std::size_t count = raw_rays.size();
  if (count < 3) {
    throw Error(ErrorCode::TooFewRays,
                "a complete fan needs at least 3 rays, got " + label(count));
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!raw_rays[i].is_primitive()) {
      throw Error(ErrorCode::NotPrimitive,
                  "ray " + label(i + 1) + " " + to_string(raw_rays[i]) + " is not primitive",
                  i + 1);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (raw_rays[i] == raw_rays[j]) {
        throw Error(ErrorCode::DuplicateRay,
                    "rays " + label(i + 1) + " and " + label(j + 1) + " coincide", i + 1, j + 1);
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    const auto& u = raw_rays[i];
    const auto& v = raw_rays[(i + 1) % count];
    if (sgn(det2(u, v)) <= 0) {
      throw Error(ErrorCode::NotCounterclockwise,
                  "rays " + label(i + 1) + " " + to_string(u) + " and " +
                      label((i + 1) % count + 1) + " " + to_string(v) +
                      " do not turn strictly counterclockwise",
                  i + 1);
    }
  }
  // Every step is a counterclockwise turn of less than pi, so the winding
  // number equals the number of times the angle wraps past 2 pi.
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!angle_less(raw_rays[i], raw_rays[(i + 1) % count])) ++wraps;
  }
  if (wraps != 1) {
    throw Error(ErrorCode::NotComplete,
                "rays wind " + label(wraps) + " times around the origin, expected once");
  }
  return Fan(std::move(raw_rays));
}

Fan normal_fan(const Polygon& p) {
  const auto& v = p.vertices;
  const std::size_t count = v.size();
  if (count < 3) {
    throw Error(ErrorCode::DegeneratePolygon,
                "a polygon needs at least 3 vertices, got " + label(count));
  }
  std::vector<LatticeVector> edges;
  edges.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& from = v[k];
    const auto& to = v[(k + 1) % count];
    if (from == to) {
      throw Error(ErrorCode::DegeneratePolygon,
                  "vertices " + label(k + 1) + " and " + label((k + 1) % count + 1) +
                      " coincide",
                  k + 1);
    }
    edges.emplace_back(Integer(to.a - from.a), Integer(to.b - from.b));
  }
  for (std::size_t k = 0; k < count; ++k) {
    const Integer turn = det2(edges[k], edges[(k + 1) % count]);
    const std::size_t vertex = (k + 1) % count + 1;
    if (turn == 0) {
      throw Error(ErrorCode::DegeneratePolygon,
                  "edges meeting at vertex " + label(vertex) + " are collinear", vertex);
    }
    if (turn < 0) {
      throw Error(ErrorCode::NonConvexPolygon,
                  "polygon turns clockwise at vertex " + label(vertex) +
                      "; vertices must be convex and counterclockwise",
                  vertex);
    }
  }
  std::vector<LatticeVector> normals;
  normals.reserve(count);
  for (const auto& d : edges) {
    normals.push_back(primitivize(LatticeVector(d.b, Integer(-d.a))).primitive);
  }
  try {
    return validate_fan(std::move(normals));
  } catch (const Error& e) {
    throw Error(ErrorCode::NonConvexPolygon,
                std::string("polygon is not convex: ") + e.what());
  }
}

Integer multiplicity(const Fan& f, std::size_t i) {
  check_label(f, i);
  const long k = static_cast<long>(i);
  return det2(f.ray(k), f.ray(k + 1));
}

bool is_smooth_cone(const Fan& f, std::size_t i) { return multiplicity(f, i) == 1; }

bool has_smooth_vertex(const Fan& f) {
  for (std::size_t i = 1; i <= f.size(); ++i) {
    if (is_smooth_cone(f, i)) return true;
  }
  return false;
}

WallRelation wall_relation(const Fan& f, std::size_t i) {
  check_label(f, i);
  const long k = static_cast<long>(i);
  const auto& prev = f.ray(k - 1);
  const auto& mid = f.ray(k);
  const auto& next = f.ray(k + 1);
  // Cramer: det(v,w) u + det(w,u) v + det(u,v) w = 0.
  Integer c_prev = det2(mid, next);
  Integer c_mid = -det2(prev, next);
  Integer c_next = det2(prev, mid);
  Integer g = gcd(gcd(c_prev, c_mid), c_next);
  if (c_prev < 0) g = -g;  // unreachable for a validated fan
  return {Integer(c_prev / g), Integer(c_mid / g), Integer(c_next / g)};
}

Normalized normalize(const Fan& f, std::size_t pivot) {
  check_label(f, pivot);
  const std::size_t size = f.size();
  const std::size_t target = size - 1;  // label n+1
  const std::size_t shift = (pivot + size - target) % size;
  const UnimodularMap map = unimodular_to_e1(f.ray(static_cast<long>(pivot)));
  std::vector<LatticeVector> rays;
  rays.reserve(size);
  for (std::size_t k = 1; k <= size; ++k) {
    rays.push_back(map.apply(f.ray(static_cast<long>(k + shift))));
  }
  return {validate_fan(std::move(rays)), map, shift};
}

Normalized normalize(const Fan& f) { return normalize(f, f.size() - 1); }

bool is_normalized(const Fan& f) {
  return f.ray(static_cast<long>(f.size()) - 1) == LatticeVector(1, 0);
}

Fan transform(const Fan& f, const UnimodularMap& m) {
  std::vector<LatticeVector> rays;
  rays.reserve(f.size());
  for (const auto& r : f.rays()) rays.push_back(m.apply(r));
  return validate_fan(std::move(rays));
}

Normalized smooth_vertex_form(const Fan& f) {
  for (std::size_t i = 1; i <= f.size(); ++i) {
    if (!is_smooth_cone(f, i)) continue;
    Normalized norm = normalize(f, i);
    // ray(n+2) = (c, 1) after normalizing; shear it onto (0, 1).
    const Integer c = norm.fan.ray(static_cast<long>(f.size())).a;
    const UnimodularMap shear = UnimodularMap::from_rows(1, Integer(-c), 0, 1);
    return {transform(norm.fan, shear), shear * norm.map, norm.shift};
  }
  throw Error(ErrorCode::SmoothVertexRequired, "fan has no smooth cone");
}

Fan random_complete_fan(std::size_t ray_count, std::int64_t coord_bound, std::uint64_t seed) {
  if (ray_count < 3) {
    throw Error(ErrorCode::InvalidArgument, "ray_count must be at least 3");
  }
  if (coord_bound < 1 || coord_bound > (std::int64_t{1} << 40)) {
    throw Error(ErrorCode::InvalidArgument, "coord_bound must lie in [1, 2^40]");
  }
  std::mt19937_64 rng(seed);
  const std::size_t draws_per_attempt = 64 * ray_count;
  std::vector<LatticeVector> rays;
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    rays.clear();
    for (std::size_t d = 0; d < draws_per_attempt && rays.size() < ray_count; ++d) {
      LatticeVector v(draw(rng, -coord_bound, coord_bound), draw(rng, -coord_bound, coord_bound));
      if (!v.is_primitive()) continue;  // also rejects (0,0)
      if (std::find(rays.begin(), rays.end(), v) != rays.end()) continue;
      rays.push_back(std::move(v));
    }
    if (rays.size() < ray_count) continue;
    std::sort(rays.begin(), rays.end(), angle_less);
    bool complete = true;
    for (std::size_t i = 0; i < ray_count && complete; ++i) {
      complete = sgn(det2(rays[i], rays[(i + 1) % ray_count])) > 0;
    }
    if (!complete) continue;
    const auto pivot = static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(ray_count)));
    return normalize(validate_fan(rays), pivot).fan;
  }
  throw Error(ErrorCode::GenerationFailed,
              "no complete fan with " + label(ray_count) + " rays in [-" +
                  std::to_string(coord_bound) + ", " + std::to_string(coord_bound) +
                  "]^2 after " + std::to_string(kMaxGenerationAttempts) + " attempts");
}

}  // namespace toric
