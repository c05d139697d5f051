#include "toric/rational_matrix.hpp"

#include <utility>

#include "toric/error.hpp"

namespace toric {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::ShapeError, "ragged matrix literal");
    for (const auto& q : row) {
      Rational c = q;
      c.canonicalize();
      entries_.push_back(std::move(c));
    }
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

bool RationalMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

RationalMatrix RationalMatrix::block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw Error(ErrorCode::ShapeError, "block exceeds matrix");
  RationalMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(i, j);
  return b;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeError, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()) + " by " +
                                           std::to_string(b.rows()) + "x" +
                                           std::to_string(b.cols()));
  }
  RationalMatrix c(a.rows(), b.cols());
  Rational acc;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (sgn(a(i, k)) == 0) continue;
        acc += a(i, k) * b(k, j);
      }
      c(i, j) = acc;
    }
  }
  return c;
}

RationalMatrix mat_inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeError, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix work = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(col, j), work(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Rational scale = 1 / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0) continue;
      const Rational factor = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= factor * work(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeError, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix work = a;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(col, j), work(pivot, j));
      det = -det;
    }
    det *= work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(work(r, col)) == 0) continue;
      const Rational factor = work(r, col) / work(col, col);
      for (std::size_t j = col; j < n; ++j) work(r, j) -= factor * work(col, j);
    }
  }
  return det;
}

}  // namespace toric
