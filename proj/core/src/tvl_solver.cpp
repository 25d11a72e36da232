#include "tvlinf/tvl_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "tvlinf/diff_ops.hpp"
#include "tvlinf/energy.hpp"
#include "tvlinf/prox.hpp"
#include "tvlinf/tgv_solver.hpp"

namespace tvlinf {

namespace {

constexpr double kInnerTol = 1e-8;
constexpr int kInnerSweeps = 30;
constexpr double kSplitResidualFactor = 1e-4;

// y = x + mu * grad^T grad x = x - mu * div(grad x)
ScalarField apply_u_operator(const ScalarField& x, double mu) {
    ScalarField out = divergence(gradient(x));
    const std::int64_t n = x.size();
    for (std::int64_t i = 0; i < n; ++i) out[i] = x[i] - mu * out[i];
    return out;
}

double dot(const ScalarField& a, const ScalarField& b) {
    double s = 0.0;
    const std::int64_t n = a.size();
    for (std::int64_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

// Conjugate gradient sweeps on (I + mu*grad^T grad) u = rhs, warm-started
// from the current u. The operator is SPD, so plain CG applies.
void solve_u_subproblem(ScalarField& u, const ScalarField& rhs, double mu) {
    ScalarField r = apply_u_operator(u, mu);
    const std::int64_t n = u.size();
    for (std::int64_t i = 0; i < n; ++i) r[i] = rhs[i] - r[i];
    double rs = dot(r, r);
    const double stop = kInnerTol * kInnerTol * dot(rhs, rhs);
    if (rs <= stop) return;
    ScalarField p = r;
    for (int k = 0; k < kInnerSweeps; ++k) {
        const ScalarField ap = apply_u_operator(p, mu);
        const double denom = dot(p, ap);
        if (denom <= 0.0) break;
        const double a = rs / denom;
        for (std::int64_t i = 0; i < n; ++i) {
            u[i] += a * p[i];
            r[i] -= a * ap[i];
        }
        const double rs_new = dot(r, r);
        if (rs_new <= stop) break;
        const double beta = rs_new / rs;
        rs = rs_new;
        for (std::int64_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    }
}

VectorField combine(const VectorField& a, double sa, const VectorField& b, double sb,
                    const VectorField& c, double sc) {
    VectorField out(a.grid());
    const std::int64_t n = a.grid().point_count();
    for (int k = 0; k < a.components(); ++k) {
        const auto &pa = a.comp(k), &pb = b.comp(k), &pc = c.comp(k);
        auto& po = out.comp(k);
        for (std::int64_t i = 0; i < n; ++i) po[i] = sa * pa[i] + sb * pb[i] + sc * pc[i];
    }
    return out;
}

DenoiseResult solve_split(const ScalarField& f, double alpha, const RegParams& p,
                          bool with_w, const ScalarField* u0) {
    const GridSpec& grid = f.grid();
    RegParams eff = p;
    eff.alpha = alpha;
    if (eff.mu == 0.0) {
        // mu ~ alpha * h keeps the u-system conditioning grid-independent;
        // on unit-spacing grids this is plain mu = alpha.
        double hmin = grid.spacing(0);
        if (grid.dims() == 2) hmin = std::min(hmin, grid.spacing(1));
        eff.mu = alpha * hmin;
    }
    eff.validate(grid);

    const double mu = eff.mu;
    const double cv = grid.cell_volume();
    const double tau_d = alpha / mu;
    // The sup-norm term carries no cell-volume weight, hence the 1/cv here.
    const double tau_w = (eff.beta_map ? 1.0 : eff.beta) / (mu * cv);
    const ScalarField* beta_map = eff.beta_map ? &*eff.beta_map : nullptr;

    ScalarField u = u0 ? *u0 : f;
    if (u0) check_same_grid(u0->grid(), grid, "solve: u0");
    VectorField w(grid), d(grid), b(grid);

    // Absolute floor for the splitting-residual test; without it flat
    // solutions (grad u -> 0) could never satisfy resid <= 1e-4*||grad u||.
    const double resid_floor = eff.tol * norm_l2(gradient(f));

    SolveReport report;
    const std::int64_t n = grid.point_count();
    for (int it = 0; it < eff.max_iters; ++it) {
        const ScalarField u_prev = u;

        // (a) quadratic u-subproblem
        ScalarField rhs = divergence(combine(d, 1.0, w, 1.0, b, -1.0));
        for (std::int64_t i = 0; i < n; ++i) rhs[i] = f[i] - mu * rhs[i];
        solve_u_subproblem(u, rhs, mu);

        const VectorField gu = gradient(u);

        // (b) shrink on the splitting variable
        d = shrink_vector(combine(gu, 1.0, w, -1.0, b, 1.0), tau_d);

        // (c) sup-norm prox on w
        if (with_w) w = prox_linf(combine(gu, 1.0, d, -1.0, b, 1.0), tau_w, beta_map);

        // (d) Bregman/dual update
        const VectorField split_residual = combine(gu, 1.0, d, -1.0, w, -1.0);
        for (int k = 0; k < b.components(); ++k) {
            auto& pb = b.comp(k);
            const auto& pr = split_residual.comp(k);
            for (std::int64_t i = 0; i < n; ++i) pb[i] += pr[i];
        }

        report.energy_history.push_back(with_w ? energy_tvlinf(u, w, f, eff)
                                               : energy_tv(u, f, alpha));
        const double resid = norm_l2(split_residual);
        report.residual_history.push_back(resid);
        report.iterations = it + 1;

        double diff2 = 0.0, base2 = 0.0;
        for (std::int64_t i = 0; i < n; ++i) {
            const double dd = u[i] - u_prev[i];
            diff2 += dd * dd;
            base2 += u_prev[i] * u_prev[i];
        }
        const double rel_change = std::sqrt(diff2) / std::max(std::sqrt(base2), 1e-300);
        if (rel_change < eff.tol &&
            resid <= std::max(kSplitResidualFactor * norm_l2(gu), resid_floor)) {
            report.converged = true;
            break;
        }
    }
    return DenoiseResult{std::move(u), std::move(w), std::move(report)};
}

}  // namespace

DenoiseResult solve_tvlinf(const ScalarField& f, const RegParams& p, const ScalarField* u0) {
    return solve_split(f, p.alpha, p, /*with_w=*/true, u0);
}

DenoiseResult solve_tv(const ScalarField& f, double alpha, const RegParams& p,
                       const ScalarField* u0) {
    RegParams eff = p;
    eff.beta = 1.0;  // unused with w pinned to zero
    eff.beta_map.reset();
    return solve_split(f, alpha, eff, /*with_w=*/false, u0);
}

std::vector<BregmanStep> bregman_iterate(const ScalarField& f, const RegParams& p,
                                         int outer_iters, InnerModel model) {
    if (outer_iters < 1) throw std::invalid_argument("bregman_iterate: outer_iters must be >= 1");
    const std::int64_t n = f.size();
    ScalarField v(f.grid());
    std::vector<BregmanStep> steps;
    steps.reserve(static_cast<std::size_t>(outer_iters));
    for (int k = 0; k < outer_iters; ++k) {
        ScalarField data = f;
        for (std::int64_t i = 0; i < n; ++i) data[i] += v[i];
        DenoiseResult r = [&] {
            switch (model) {
                case InnerModel::Tv: return solve_tv(data, p.alpha, p);
                case InnerModel::Tgv: return solve_tgv(data, p.alpha, p.beta, p);
                default: return solve_tvlinf(data, p);
            }
        }();
        for (std::int64_t i = 0; i < n; ++i) v[i] += f[i] - r.u[i];
        steps.push_back(BregmanStep{std::move(r.u), std::move(r.report)});
    }
    return steps;
}

}  // namespace tvlinf
