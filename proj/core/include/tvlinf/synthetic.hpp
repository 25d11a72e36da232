#pragma once

#include <cstdint>

#include "tvlinf/field.hpp"

namespace tvlinf {

/// h * X_(0,L) sampled cell-centred on (-L, L) with n points.
ScalarField step_1d(double L, double h_jump, int n);

/// h * X_(0,L) + lambda * x, same sampling.
ScalarField affine_step_1d(double L, double h_jump, double lambda, int n);

/// Even triangular profile height * max(0, 1 - |x|/half_width) on (-L, L).
ScalarField hat_1d(double L, double height, double half_width, int n);

/// n x n image (unit spacing, values in [0, 1]): conical disc rising from a
/// rim value at radius 0.35*n to a sharp apex at the centre, on a flat
/// background. The gradient modulus is constant inside the disc.
ScalarField circle_2d(int n);

/// n x n image (unit spacing): square-based pyramid whose inner square slopes
/// twice as steeply as the outer frame.
ScalarField pyramid_square_2d(int n);

/// Adds i.i.d. Gaussian noise of the given variance; variance 0 returns the
/// input unchanged. Deterministic for a fixed seed.
ScalarField add_gaussian_noise(const ScalarField& field, double variance, std::uint64_t seed);

}  // namespace tvlinf
