#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace toric {

using Rational = mpq_class;

/// Builds num/den in canonical form (den > 0, reduced).
Rational make_rational(const mpz_class& num, const mpz_class& den = 1);

/// "p/q", or "p" when q = 1. Always canonical.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Row-list literal; every row must have the same length.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transpose() const;
  bool is_symmetric() const;
  bool is_identity() const;
  /// Upper-left rows x cols block.
  RationalMatrix block(std::size_t rows, std::size_t cols) const;

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact product. Throws ErrorCode::ShapeError when a.cols() != b.rows().
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

/// Exact inverse by Gauss-Jordan elimination (first nonzero pivot in each
/// column). Throws ShapeError for non-square input, Singular otherwise.
RationalMatrix mat_inverse(const RationalMatrix& a);

/// Exact determinant by fraction-field elimination. Throws ShapeError.
Rational determinant(const RationalMatrix& a);

}  // namespace toric
