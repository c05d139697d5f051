#include "toric/chow.hpp"

#include "toric/error.hpp"

namespace toric {

namespace {

void check_label(const Fan& f, std::size_t i) {
  if (i < 1 || i > f.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "ray label " + std::to_string(i) + " outside 1.." + std::to_string(f.size()), i);
  }
}

}  // namespace

bool adjacent(const Fan& f, std::size_t i, std::size_t j) {
  const std::size_t size = f.size();
  if (i == j) return false;
  const std::size_t diff = (i > j ? i - j : j - i) % size;
  return diff == 1 || diff == size - 1;
}

Rational self_intersection(const WallRelation& w, const Integer& mult_prev) {
  return make_rational(w.c_mid, Integer(w.c_prev * mult_prev));
}

Rational intersection_number(const Fan& f, std::size_t i, std::size_t j) {
  check_label(f, i);
  check_label(f, j);
  if (i == j) {
    const long k = static_cast<long>(i);
    return self_intersection(wall_relation(f, i), det2(f.ray(k - 1), f.ray(k)));
  }
  if (!adjacent(f, i, j)) return 0;
  // The cone is labeled by whichever of the two rays comes first counterclockwise.
  const std::size_t first = (i % f.size() + 1 == j) ? i : j;
  return make_rational(1, multiplicity(f, first));
}

RationalMatrix intersection_table(const Fan& f) {
  const std::size_t size = f.size();
  RationalMatrix table(size, size);
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t j = i; j <= size; ++j) {
      table(i - 1, j - 1) = intersection_number(f, i, j);
      table(j - 1, i - 1) = table(i - 1, j - 1);
    }
  }
  return table;
}

RationalMatrix intersection_matrix(const Fan& f) {
  const std::size_t n = f.n();
  RationalMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      m(i - 1, j - 1) = intersection_number(f, i, j);
      m(j - 1, i - 1) = m(i - 1, j - 1);
    }
  }
  return m;
}

ChowPresentation presentation(const Fan& f) {
  ChowPresentation p;
  for (const auto& r : f.rays()) {
    p.a_form.push_back(r.a);
    p.b_form.push_back(r.b);
  }
  for (std::size_t i = 1; i <= f.size(); ++i) {
    for (std::size_t j = i + 1; j <= f.size(); ++j) {
      if (!adjacent(f, i, j)) p.nonadjacent_pairs.emplace_back(i, j);
    }
  }
  return p;
}

std::pair<LinearForm, LinearForm> express_dropped_divisors(const Fan& f) {
  if (!is_normalized(f)) {
    throw Error(ErrorCode::NotNormalized,
                "ray " + std::to_string(f.size() - 1) + " must be (1,0), got " +
                    to_string(f.ray(static_cast<long>(f.size()) - 1)));
  }
  const std::size_t n = f.n();
  const LatticeVector& last = f.ray(static_cast<long>(n + 2));
  // sum a_i x_i + x_{n+1} + a_{n+2} x_{n+2} = 0 and sum b_i x_i + b_{n+2} x_{n+2} = 0.
  LinearForm x_first(n + 2), x_last(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const LatticeVector& r = f.rays()[i];
    x_last[i] = make_rational(Integer(-r.b), last.b);
    x_first[i] = -r.a - last.a * x_last[i];
  }
  return {x_first, x_last};
}

Rational reduce_quadratic(const Fan& f, const RationalMatrix& q) {
  if (q.rows() != f.size() || q.cols() != f.size()) {
    throw Error(ErrorCode::ShapeError, "quadratic form must be " + std::to_string(f.size()) +
                                           "x" + std::to_string(f.size()));
  }
  Rational total = 0;
  for (std::size_t i = 1; i <= f.size(); ++i) {
    for (std::size_t j = 1; j <= f.size(); ++j) {
      if (sgn(q(i - 1, j - 1)) == 0) continue;
      total += q(i - 1, j - 1) * intersection_number(f, i, j);
    }
  }
  return total;
}

}  // namespace toric
