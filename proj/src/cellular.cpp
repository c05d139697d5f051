#include "toric/cellular.hpp"

#include "toric/error.hpp"

namespace toric {

namespace {

void require_normalized(const Fan& f) {
  if (!is_normalized(f)) {
    throw Error(ErrorCode::NotNormalized,
                "ray " + std::to_string(f.size() - 1) + " must be (1,0), got " +
                    to_string(f.ray(static_cast<long>(f.size()) - 1)));
  }
}

void check_basis_label(const Fan& f, std::size_t i) {
  if (i < 1 || i > f.n()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "basis label " + std::to_string(i) + " outside 1.." + std::to_string(f.n()), i);
  }
}

const LatticeVector& last_ray(const Fan& f) { return f.ray(static_cast<long>(f.size())); }

}  // namespace

RationalMatrix cup_matrix(const Fan& f) {
  require_normalized(f);
  const std::size_t n = f.n();
  const LatticeVector& last = last_ray(f);
  RationalMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const LatticeVector& ri = f.rays()[i];
    const Integer twist = ri.a * last.b - last.a * ri.b;
    for (std::size_t j = i; j < n; ++j) {
      c(i, j) = make_rational(Integer(f.rays()[j].b * twist), last.b);
      c(j, i) = c(i, j);
    }
  }
  return c;
}

RationalMatrix cup_matrix_smooth(const Fan& f) {
  if (!is_normalized(f) || last_ray(f) != LatticeVector(0, 1)) {
    throw Error(ErrorCode::SmoothVertexRequired,
                "rays n+1 and n+2 must be (1,0) and (0,1)");
  }
  const std::size_t n = f.n();
  RationalMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      c(i, j) = Rational(f.rays()[i].a * f.rays()[j].b);
      c(j, i) = c(i, j);
    }
  }
  return c;
}

Integer g_factor(const Fan& f, std::size_t i) {
  check_basis_label(f, i);
  const LatticeVector& r = f.rays()[i - 1];
  const LatticeVector& last = last_ray(f);
  return gcd(Integer(r.a * last.b), Integer(last.a * r.b));
}

Fan kappa_fan(const Fan& f) {
  require_normalized(f);
  const LatticeVector& last = last_ray(f);
  if (last.a == 0) return f;
  if (last.a < 0) {
    throw Error(ErrorCode::UnsupportedOrientation,
                "kappa reverses orientation when a_{n+2} < 0 (ray n+2 = " + to_string(last) + ")");
  }
  std::vector<LatticeVector> rays;
  rays.reserve(f.size());
  for (const auto& r : f.rays()) {
    LatticeVector image(Integer(last.b * r.a - last.a * r.b), Integer(last.a * r.b));
    rays.push_back(primitivize(image).primitive);
  }
  return validate_fan(std::move(rays));
}

LinearForm phi_u(const Fan& f, std::size_t i) {
  check_basis_label(f, i);
  const RationalMatrix c = cup_matrix(f);
  LinearForm row(f.size());
  for (std::size_t j = 0; j < f.n(); ++j) row[j] = c(i - 1, j);
  return row;
}

BasisChange basis_change(const Fan& f) {
  BasisChange change;
  change.cellular_in_pd = cup_matrix(f);
  try {
    change.pd_in_cellular = mat_inverse(change.cellular_in_pd);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::InternalError, "cup product matrix of a valid fan is singular");
  }
  return change;
}

}  // namespace toric
