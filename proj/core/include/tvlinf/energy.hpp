#pragma once

#include "tvlinf/field.hpp"

namespace tvlinf {

/// Discrete objective 0.5*||f-u||^2 + alpha*||grad(u)-w||_1 + beta*||w||_inf.
/// The quadratic and the 1-norm (of pointwise Euclidean magnitudes) are
/// cell-volume weighted; the sup norm is the plain pointwise maximum. A
/// spatially varying beta contributes max over x of beta(x)*|w(x)|.
double energy_tvlinf(const ScalarField& u, const VectorField& w, const ScalarField& f,
                     const RegParams& p);

/// 0.5*||f-u||^2 + alpha*TV(u).
double energy_tv(const ScalarField& u, const ScalarField& f, double alpha);

/// 0.5*||f-u||^2 + alpha*||grad(u)-w||_1 + beta*||E w||_1 with E the
/// symmetrised gradient (plain derivative of w in 1D).
double energy_tgv(const ScalarField& u, const VectorField& w, const ScalarField& f,
                  double alpha, double beta);

/// Cell-volume weighted sum of pointwise gradient magnitudes.
double total_variation(const ScalarField& u);

}  // namespace tvlinf
