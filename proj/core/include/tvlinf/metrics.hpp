#pragma once

#include "tvlinf/field.hpp"

namespace tvlinf {

/// Mean local structural similarity in [-1, 1] for fields with values in
/// [0, 1]: Gaussian window sigma = 1.5, 11 taps per axis, K1 = 0.01,
/// K2 = 0.03, dynamic range 1. Inputs slightly outside [0, 1] are clamped
/// with a warning on stderr.
double ssim(const ScalarField& a, const ScalarField& b);

/// Peak signal-to-noise ratio in dB against dynamic range 1; +infinity for
/// identical fields.
double psnr(const ScalarField& a, const ScalarField& b);

/// h-weighted L2 distance, consistent with the energies.
double l2_distance(const ScalarField& a, const ScalarField& b);

}  // namespace tvlinf
