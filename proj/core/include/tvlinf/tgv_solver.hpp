#pragma once

#include "tvlinf/field.hpp"
#include "tvlinf/tvl_solver.hpp"

namespace tvlinf {

/// Second-order TGV denoising,
///   min_{u,w} 0.5*||f-u||^2 + alpha*||grad(u)-w||_1 + beta*||E w||_1,
/// by a Chambolle-Pock primal-dual scheme with steps sigma = tau = 1/||K||,
/// where ||K|| is bounded from the forward-difference operator norms. The
/// residual history records a primal-dual gap computed from a feasibility-
/// scaled dual point; the run stops once the gap falls below p.tol times the
/// initial gap (p.alpha/p.beta are ignored in favour of the arguments).
DenoiseResult solve_tgv(const ScalarField& f, double alpha, double beta, const RegParams& p);

}  // namespace tvlinf
