#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "toric/fan.hpp"
#include "toric/rational_matrix.hpp"

namespace toric {

/// Coefficients q_1..q_{n+2} of a class sum q_i x_i; stored 0-based.
using LinearForm = std::vector<Rational>;

/// Q[x_1..x_{n+2}] modulo the two linear forms and the monomials x_i x_j of
/// non-adjacent rays.
struct ChowPresentation {
  std::vector<Integer> a_form;  // coefficients of sum a_i x_i
  std::vector<Integer> b_form;  // coefficients of sum b_i x_i
  std::vector<std::pair<std::size_t, std::size_t>> nonadjacent_pairs;  // 1-based, i < j
};

/// True when rays i and j span a 2-cone: |i - j| == 1 mod (n+2).
bool adjacent(const Fan& f, std::size_t i, std::size_t j);

/// c_mid / (c_prev * mult_prev): the self-intersection read from one side of
/// a wall. Works for any scaling of the relation.
Rational self_intersection(const WallRelation& w, const Integer& mult_prev);

/// m with [D_i] . [D_j] = m [V]; labels 1..n+2.
Rational intersection_number(const Fan& f, std::size_t i, std::size_t j);

/// The full (n+2) x (n+2) table.
RationalMatrix intersection_table(const Fan& f);

/// M_int: the upper-left n x n block of the table.
RationalMatrix intersection_matrix(const Fan& f);

ChowPresentation presentation(const Fan& f);

/// Expressions of x_{n+1} and x_{n+2} in x_1..x_n obtained from the linear
/// relations. Entries n+1 and n+2 of both forms are zero. Requires
/// ray(n+1) = (1,0) (NotNormalized otherwise).
std::pair<LinearForm, LinearForm> express_dropped_divisors(const Fan& f);

/// Degree of the quadratic class sum q_ij x_i x_j, i.e. sum q_ij m_ij.
/// q must be (n+2) x (n+2) (ShapeError otherwise).
Rational reduce_quadratic(const Fan& f, const RationalMatrix& q);

}  // namespace toric
