#pragma once

#include <span>
#include <vector>

#include "tvlinf/field.hpp"

namespace tvlinf {

/// Pointwise vectorial soft threshold: v(x) * max(|v(x)|-tau, 0) / |v(x)|,
/// with 0 when |v(x)| <= tau. Prox of tau * sum of pointwise magnitudes.
VectorField shrink_vector(const VectorField& v, double tau);

/// Euclidean projection onto { z : sum |z_i| <= radius }. Returns v unchanged
/// when it is already feasible. Sort-based threshold search, O(n log n).
std::vector<double> project_l1_ball(std::vector<double> v, double radius);

/// Projection onto the weighted ball { z : sum a_i |z_i| <= radius }, a_i > 0.
/// With all a_i = 1 this is project_l1_ball.
std::vector<double> project_weighted_l1_ball(std::vector<double> v,
                                             std::span<const double> weights,
                                             double radius);

/// Prox of w -> tau * max_x |w(x)| (uniform case; any scalar weight is folded
/// into tau), or of w -> tau * max_x beta(x)*|w(x)| when beta_map is given.
/// Computed through the Moreau identity: the residual v - prox(v) is the
/// projection of the pointwise magnitudes onto the dual ball
/// { z : sum |z_i| / beta_i <= tau }, directions preserved.
VectorField prox_linf(const VectorField& v, double tau,
                      const ScalarField* beta_map = nullptr);

}  // namespace tvlinf
