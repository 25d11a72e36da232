#include <cstdio>

#include "tvlinf/oracle_1d.hpp"
#include "tvlinf/tvl_solver.hpp"

using namespace tvlinf;

int main() {
    const StepData data{1.0, 1.0, 1.0};
    const ScalarField f = sample_data(data, 512);
    RegParams p;
    p.alpha = 0.3;
    p.beta = 0.35;
    p.tol = 1e-8;
    p.max_iters = 3;
    const DenoiseResult r = solve_tvlinf(f, p);
    double du = 0.0;
    for (std::int64_t i = 0; i < f.size(); ++i) du = std::max(du, std::abs(r.u[i] - f[i]));
    std::printf("after 3 iters: max|u-f| = %.3e, wmax = %.3e, conv=%d\n", du,
                r.w.max_magnitude(), r.report.converged);
    const Certificate1D c = build_certificate(r.u, r.w, f, 0.3, 0.35);
    std::printf("cert: b=%.3e linf=%.3e l1=%.3e pair=%.3e sign=%.3e\n", c.r_boundary, c.r_linf,
                c.r_l1, c.r_pairing, c.r_sign);

    // energy oscillation diagnostics near convergence
    RegParams p2 = p;
    p2.max_iters = 40000;
    p2.tol = 1e-10;
    const DenoiseResult r2 = solve_tvlinf(f, p2);
    const auto& e = r2.report.energy_history;
    std::printf("iters=%d conv=%d\n", r2.report.iterations, r2.report.converged);
    double worst_up_half = 0.0, worst_up_q4 = 0.0;
    for (std::size_t k = e.size() / 2; k + 1 < e.size(); ++k)
        worst_up_half = std::max(worst_up_half, e[k + 1] - e[k]);
    for (std::size_t k = 3 * e.size() / 4; k + 1 < e.size(); ++k)
        worst_up_q4 = std::max(worst_up_q4, e[k + 1] - e[k]);
    std::printf("max upward energy step: half=%.3e q4=%.3e final=%.10f\n", worst_up_half,
                worst_up_q4, e.back());
    return 0;
}
