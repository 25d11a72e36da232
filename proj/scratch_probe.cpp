// Throwaway exploration harness (not part of the build).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "tvlinf/diff_ops.hpp"
#include "tvlinf/energy.hpp"
#include "tvlinf/metrics.hpp"
#include "tvlinf/oracle_1d.hpp"
#include "tvlinf/synthetic.hpp"
#include "tvlinf/tgv_solver.hpp"
#include "tvlinf/tvl_solver.hpp"

using namespace tvlinf;

static double rel_l2(const ScalarField& a, const ScalarField& b) {
    return l2_distance(a, b) / norm_l2(b);
}

int main(int argc, char** argv) {
    const double H = argc > 1 ? atof(argv[1]) : 4.0;
    const double halfw = argc > 2 ? atof(argv[2]) : 4.0;
    const double L = argc > 3 ? atof(argv[3]) : 8.0;
    const int n = argc > 4 ? atoi(argv[4]) : 1024;
    const int iters = argc > 5 ? atoi(argv[5]) : 100000;

    const ScalarField f = hat_1d(L, H, halfw, n);

    RegParams pv;
    pv.alpha = 2.0;
    pv.beta = 4.0;
    pv.tol = 1e-9;
    pv.max_iters = 50000;
    const auto rv = solve_tvlinf(f, pv);
    std::printf("tvlinf iters=%d conv=%d wmax=%.4f\n", rv.report.iterations,
                rv.report.converged, rv.w.max_magnitude());

    for (int budget = iters / 4; budget <= iters; budget *= 2) {
        RegParams p;
        p.tol = 1e-12;
        p.max_iters = budget;
        const auto t0 = std::chrono::steady_clock::now();
        const auto rg = solve_tgv(f, 2.0, 2.0, p);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const auto& gap = rg.report.residual_history;
        std::printf("TGV budget=%d gapratio=%.2e agree=%.3e time=%.1fs\n", budget,
                    gap.back() / gap.front(), rel_l2(rg.u, rv.u), secs);
    }
    return 0;
}
