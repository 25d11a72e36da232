#pragma once

#include "tvlinf/field.hpp"

namespace tvlinf {

/// Forward-difference gradient with Neumann (replicate) boundary: component k
/// at the last point along axis k is zero. Divided by the grid spacing.
VectorField gradient(const ScalarField& u);

/// Negative adjoint of gradient(): <gradient(u), p> = -<u, divergence(p)>
/// holds exactly for the h-weighted inner products.
ScalarField divergence(const VectorField& p);

/// Separable convolution with a normalised sampled Gaussian. sigma > 0,
/// window odd and >= 3; windows larger than the image are clamped (with a
/// warning on stderr). Boundary handling is symmetric reflection, which keeps
/// the operator doubly stochastic: constants and the mean are preserved.
ScalarField gaussian_filter(const ScalarField& f, double sigma, int window);

}  // namespace tvlinf
