#pragma once

#include <vector>

#include "tvlinf/field.hpp"

namespace tvlinf {

struct DenoiseResult {
    ScalarField u;
    VectorField w;
    SolveReport report;
};

/// Split-Bregman solver for
///   min_{u,w} 0.5*||f-u||^2 + alpha*||grad(u)-w||_1 + beta*||w||_inf
/// on the splitting d = grad(u) - w with penalty mu (default alpha):
///   u   from (I + mu*grad^T grad) u = f + mu*grad^T(d + w - b) by CG sweeps,
///   d   by the vectorial shrink with threshold alpha/mu,
///   w   by the sup-norm prox,
///   b  += grad(u) - d - w.
/// Stops when the relative L2 change of u drops below p.tol and the splitting
/// residual ||grad(u)-d-w|| is below 1e-4*||grad(u)||. Non-convergence within
/// p.max_iters leaves report.converged false; the iterate is still returned.
/// u0, when given, overrides the default warm start u = f.
DenoiseResult solve_tvlinf(const ScalarField& f, const RegParams& p,
                           const ScalarField* u0 = nullptr);

/// Same scheme with w pinned to zero: ROF / TV denoising with weight alpha
/// (p.alpha and p.beta are ignored; p supplies mu, tol and max_iters, with
/// the default penalty mu = alpha). The returned w is the zero field.
DenoiseResult solve_tv(const ScalarField& f, double alpha, const RegParams& p,
                       const ScalarField* u0 = nullptr);

enum class InnerModel { Tv, Tvlinf, Tgv };

struct BregmanStep {
    ScalarField u;
    SolveReport report;
};

/// Contrast-restoring outer loop: starting from v = 0, repeatedly solve the
/// inner model with data f + v and update v += f - u. The trajectory of inner
/// solutions is returned, one entry per outer iteration.
std::vector<BregmanStep> bregman_iterate(const ScalarField& f, const RegParams& p,
                                         int outer_iters, InnerModel model);

}  // namespace tvlinf
