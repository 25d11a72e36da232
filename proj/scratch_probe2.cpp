// Throwaway 2D exploration (not part of the build).
#include <chrono>
#include <cstdio>

#include "tvlinf/adaptive_beta.hpp"
#include "tvlinf/metrics.hpp"
#include "tvlinf/synthetic.hpp"
#include "tvlinf/tvl_solver.hpp"

using namespace tvlinf;

int main(int argc, char** argv) {
    const int n = argc > 1 ? atoi(argv[1]) : 96;
    const int mode = argc > 2 ? atoi(argv[2]) : 0;

    if (mode == 0) {
        const ScalarField clean = circle_2d(n);
        const ScalarField noisy = add_gaussian_noise(clean, 0.01, 1234);
        std::printf("noisy ssim=%.4f\n", ssim(noisy, clean));
        for (double alpha : {0.3, 0.7, 1.5}) {
            for (double ratio : {300.0, 1000.0, 3000.0}) {
                RegParams p;
                p.alpha = alpha;
                p.beta = alpha * ratio;
                p.tol = 1e-6;
                p.max_iters = 4000;
                const auto t0 = std::chrono::steady_clock::now();
                const auto r = solve_tvlinf(noisy, p);
                const double secs =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
                std::printf(
                    "alpha=%.2f beta=%.0f ssim=%.4f wmax=%.4f conv=%d iters=%d (%.1fs)\n",
                    alpha, p.beta, ssim(r.u, clean), r.w.max_magnitude(), r.report.converged,
                    r.report.iterations, secs);
            }
        }
    } else if (mode == 1) {
        // Bregman restoration at given alpha, beta
        const double alpha = argc > 3 ? atof(argv[3]) : 1.5;
        const double beta = argc > 4 ? atof(argv[4]) : 1500.0;
        const int outer = argc > 5 ? atoi(argv[5]) : 8;
        const ScalarField clean = circle_2d(n);
        const ScalarField noisy = add_gaussian_noise(clean, 0.01, 1234);
        RegParams p;
        p.alpha = alpha;
        p.beta = beta;
        p.tol = 1e-6;
        p.max_iters = 4000;
        const auto steps = bregman_iterate(noisy, p, outer, InnerModel::Tvlinf);
        for (std::size_t k = 0; k < steps.size(); ++k) {
            std::printf("breg k=%zu ssim=%.4f fid=%.5f\n", k + 1, ssim(steps[k].u, clean),
                        l2_distance(noisy, steps[k].u));
        }
    } else {
        // pyramid: uniform sweep vs adaptive
        const double alpha = argc > 3 ? atof(argv[3]) : 1.0;
        const double c = argc > 4 ? atof(argv[4]) : 30.0;
        const ScalarField clean = pyramid_square_2d(n);
        const ScalarField noisy = add_gaussian_noise(clean, 0.01, 99);
        std::printf("noisy ssim=%.4f\n", ssim(noisy, clean));
        // slopes: outer s, inner 2s
        const double T = (n - 1) / 2.0, a = T / 2.0;
        const double s = 0.9 / (T + a);
        std::printf("slopes: outer %.5f inner %.5f\n", s, 2 * s);
        for (double beta : {alpha * 4.0 / s, alpha * 8.0 / s, alpha * 16.0 / s,
                            alpha * 32.0 / s, alpha * 64.0 / s}) {
            RegParams p;
            p.alpha = alpha;
            p.beta = beta;
            p.tol = 1e-6;
            p.max_iters = 4000;
            const auto r = solve_tvlinf(noisy, p);
            std::printf("uniform beta=%.0f ssim=%.4f wmax=%.4f\n", beta, ssim(r.u, clean),
                        r.w.max_magnitude());
        }
        RegParams p;
        p.alpha = alpha;
        p.beta_map = beta_from_reference(clean, c, 1e-4);
        p.tol = 1e-6;
        p.max_iters = 4000;
        const auto r = solve_tvlinf(noisy, p);
        std::printf("adaptive c=%.0f ssim=%.4f wmax=%.4f\n", c, ssim(r.u, clean),
                    r.w.max_magnitude());
    }
    return 0;
}
