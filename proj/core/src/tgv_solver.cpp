#include "tvlinf/tgv_solver.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "tensor_ops.hpp"
#include "tvlinf/diff_ops.hpp"
#include "tvlinf/energy.hpp"

namespace tvlinf {

namespace {

using detail::SymTensorField;

void project_vector_ball(VectorField& p, double radius) {
    const std::int64_t n = p.grid().point_count();
    const int d = p.components();
    for (std::int64_t i = 0; i < n; ++i) {
        const double m = p.magnitude(i);
        if (m > radius) {
            const double s = radius / m;
            for (int k = 0; k < d; ++k) p.comp(k)[i] *= s;
        }
    }
}

void project_sym_ball(SymTensorField& q, double radius) {
    const std::int64_t n = q.grid.point_count();
    for (std::int64_t i = 0; i < n; ++i) {
        const double m = q.norm_at(i);
        if (m > radius) {
            const double s = radius / m;
            for (auto& c : q.comps) c[i] *= s;
        }
    }
}

// Lower bound on the primal optimum from a feasible dual point built by
// scaling the current q so that |E* q| <= alpha pointwise:
//   D = <f, g> - 0.5*||g||^2 with g = -div(E* q~).
double dual_lower_bound(const ScalarField& f, const VectorField& p_induced,
                        double scale_to_alpha) {
    const double s = std::min(1.0, scale_to_alpha);
    VectorField scaled = p_induced;
    for (int k = 0; k < scaled.components(); ++k)
        for (double& x : scaled.comp(k)) x *= s;
    ScalarField g = divergence(scaled);
    for (double& x : g.values()) x = -x;
    const double cv = f.grid().cell_volume();
    double dot = 0.0, norm2 = 0.0;
    const std::int64_t n = f.size();
    for (std::int64_t i = 0; i < n; ++i) {
        dot += f[i] * g[i];
        norm2 += g[i] * g[i];
    }
    return cv * (dot - 0.5 * norm2);
}

}  // namespace

DenoiseResult solve_tgv(const ScalarField& f, double alpha, double beta, const RegParams& p) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("solve_tgv: alpha, beta must be positive");
    if (p.max_iters < 1) throw std::invalid_argument("solve_tgv: max_iters must be >= 1");
    if (!(p.tol > 0.0)) throw std::invalid_argument("solve_tgv: tol must be positive");

    const GridSpec& grid = f.grid();
    const int dims = grid.dims();
    const std::int64_t n = grid.point_count();

    double hmin = grid.spacing(0);
    if (dims == 2) hmin = std::min(hmin, grid.spacing(1));
    const double op_norm_sq = 8.0 * dims / (hmin * hmin) + 2.0;
    const double step = 1.0 / std::sqrt(op_norm_sq);
    const double sigma = step, tau = step;

    ScalarField u = f, ubar = f;
    VectorField w(grid), wbar(grid), pdual(grid);
    SymTensorField q(grid);

    SolveReport report;
    double gap0 = -1.0;
    double last_energy = 0.0, last_gap = 0.0;
    constexpr int kEvalPeriod = 16;

    for (int it = 0; it < p.max_iters; ++it) {
        // dual ascent
        {
            const VectorField gu = gradient(ubar);
            for (int k = 0; k < dims; ++k) {
                auto& pp = pdual.comp(k);
                const auto &pg = gu.comp(k), &pw = wbar.comp(k);
                for (std::int64_t i = 0; i < n; ++i) pp[i] += sigma * (pg[i] - pw[i]);
            }
            project_vector_ball(pdual, alpha);

            const SymTensorField ew = detail::sym_gradient(wbar);
            for (std::size_t c = 0; c < q.comps.size(); ++c)
                for (std::int64_t i = 0; i < n; ++i) q.comps[c][i] += sigma * ew.comps[c][i];
            project_sym_ball(q, beta);
        }

        // primal descent with overrelaxation
        const VectorField sdiv_q = detail::sym_divergence(q);
        {
            const ScalarField div_p = divergence(pdual);
            for (std::int64_t i = 0; i < n; ++i) {
                const double unew = (u[i] + tau * div_p[i] + tau * f[i]) / (1.0 + tau);
                ubar[i] = 2.0 * unew - u[i];
                u[i] = unew;
            }
            for (int k = 0; k < dims; ++k) {
                auto &pw = w.comp(k), &pwb = wbar.comp(k);
                const auto &pp = pdual.comp(k), &ps = sdiv_q.comp(k);
                for (std::int64_t i = 0; i < n; ++i) {
                    const double wnew = pw[i] + tau * (pp[i] + ps[i]);
                    pwb[i] = 2.0 * wnew - pw[i];
                    pw[i] = wnew;
                }
            }
        }

        // Energy and gap are O(n) extra passes; evaluating them on a short
        // period keeps the loop lean. History entries carry the last
        // evaluated values in between.
        const bool evaluate = (it % kEvalPeriod == 0) || (it + 1 == p.max_iters);
        if (evaluate) {
            last_energy = energy_tgv(u, w, f, alpha, beta);

            // E* q = -sym_divergence(q); scale it into the alpha-ball for a
            // feasible dual value.
            VectorField p_induced(grid);
            for (int k = 0; k < dims; ++k)
                for (std::int64_t i = 0; i < n; ++i) p_induced.comp(k)[i] = -sdiv_q.comp(k)[i];
            const double pmax = p_induced.max_magnitude();
            const double scale = (pmax > 0.0) ? alpha / pmax : 1.0;
            last_gap = std::max(last_energy - dual_lower_bound(f, p_induced, scale), 0.0);
            if (gap0 < 0.0) gap0 = last_gap;
        }
        report.energy_history.push_back(last_energy);
        report.residual_history.push_back(last_gap);
        report.iterations = it + 1;
        if (evaluate && last_gap <= p.tol * std::max(gap0, 1e-300)) {
            report.converged = true;
            break;
        }
    }

    return DenoiseResult{std::move(u), std::move(w), std::move(report)};
}

}  // namespace tvlinf
