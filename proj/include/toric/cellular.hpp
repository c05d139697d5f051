#pragma once

#include <cstddef>

#include "toric/chow.hpp"
#include "toric/fan.hpp"
#include "toric/rational_matrix.hpp"

namespace toric {

/// Cellular cup product matrix for a fan with ray(n+1) = (1,0):
///   c_ij = b_j (a_i b_{n+2} - a_{n+2} b_i) / b_{n+2}   for i <= j,
/// symmetric. Throws NotNormalized.
RationalMatrix cup_matrix(const Fan& f);

/// c_ij = a_i b_j (i <= j), valid when ray(n+1) = (1,0) and ray(n+2) = (0,1).
/// Throws SmoothVertexRequired.
RationalMatrix cup_matrix_smooth(const Fan& f);

/// gcd(|a_i b_{n+2}|, |a_{n+2} b_i|) for 1 <= i <= n.
Integer g_factor(const Fan& f, std::size_t i);

/// kappa(x, y) = (b_{n+2} x - a_{n+2} y, a_{n+2} y), applied to every ray and
/// primitivized. The image has ray(n+1) = (1,0), ray(n+2) = (0,1).
///
/// Returns f unchanged when a_{n+2} = 0 (already smooth at that vertex).
/// Throws UnsupportedOrientation when a_{n+2} < 0, since kappa then reverses
/// orientation.
Fan kappa_fan(const Fan& f);

/// Row i of the cup matrix padded with zeros at n+1, n+2.
LinearForm phi_u(const Fan& f, std::size_t i);

struct BasisChange {
  RationalMatrix cellular_in_pd;  // row i: u_i over PD^-1[D_j]
  RationalMatrix pd_in_cellular;  // row i: PD^-1[D_i] over u_j
};

/// Throws InternalError if the cup matrix turns out singular.
BasisChange basis_change(const Fan& f);

}  // namespace toric
