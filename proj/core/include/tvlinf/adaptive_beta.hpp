#pragma once

#include "tvlinf/field.hpp"

namespace tvlinf {

/// Spatially adapted weight from pre-filtered data:
///   beta(x) = c / (|grad G_sigma(f)(x)| + eps),
/// with the same forward-difference gradient the solvers use. Values lie in
/// (0, c/eps].
ScalarField beta_from_data(const ScalarField& f, double c, double eps, double sigma,
                           int window);

/// Same rule without smoothing, for a trusted reference image (e.g. ground
/// truth): beta(x) = c / (|grad u_ref(x)| + eps).
ScalarField beta_from_reference(const ScalarField& u_ref, double c, double eps);

}  // namespace tvlinf
