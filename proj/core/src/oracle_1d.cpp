#include "tvlinf/oracle_1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tvlinf/diff_ops.hpp"

namespace tvlinf {

void StepData::validate() const {
    if (!(L > 0.0)) throw std::invalid_argument("StepData: L must be positive");
    if (!(h_jump > 0.0)) throw std::invalid_argument("StepData: h_jump must be positive");
    if (lambda < 0.0) throw std::invalid_argument("StepData: lambda must be >= 0");
}

Region classify_region(const StepData& data, double alpha, double beta) {
    data.validate();
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("classify_region: alpha, beta must be positive");
    const double L = data.L;
    if (beta >= alpha * 2.0 * L) return Region::TVRegime;
    if (data.lambda > 0.0) {
        const bool yellow = beta < alpha * L + data.lambda * L * L * L / 6.0 &&
                            beta > 4.0 * alpha * L / 3.0 - data.h_jump * L * L / 6.0 &&
                            beta > 2.0 * alpha * L / 3.0 &&
                            beta < 4.0 * alpha * L / 3.0;
        if (yellow) return Region::YellowAffineJump;
    }
    return Region::OtherThesisRegion;
}

double YellowSolution::operator()(double x) const {
    if (x > 0.0) return c1 * x + h_jump - c2;
    if (x < 0.0) return c1 * x + c2;
    return 0.5 * h_jump;  // midpoint of the two one-sided limits
}

double YellowSolution::dual(double x) const {
    return 0.5 * (c1 - lambda) * x * x - c2 * std::abs(x) + c3;
}

YellowSolution exact_solution_yellow(const StepData& data, double alpha, double beta) {
    if (classify_region(data, alpha, beta) != Region::YellowAffineJump)
        throw std::domain_error("exact_solution_yellow: (alpha, beta) outside the affine-jump region");
    const double L = data.L;
    YellowSolution s;
    s.c1 = 6.0 * (alpha * L - beta) / (L * L * L) + data.lambda;
    s.c2 = (4.0 * alpha * L - 3.0 * beta) / (L * L);
    s.c3 = alpha;
    s.h_jump = data.h_jump;
    s.lambda = data.lambda;
    return s;
}

StepTvSolution exact_solution_tv_step(const StepData& data, double alpha) {
    data.validate();
    if (data.lambda != 0.0)
        throw std::domain_error("exact_solution_tv_step: closed form requires lambda == 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("exact_solution_tv_step: alpha must be positive");
    const double delta = std::min(alpha / data.L, 0.5 * data.h_jump);
    return StepTvSolution{delta, data.h_jump - delta};
}

ScalarField sample_data(const StepData& data, int n) {
    data.validate();
    if (n < 16) throw std::invalid_argument("sample_data: n must be >= 16");
    return sample_profile(data.L, n, [&](double x) {
        const double step = (x > 0.0 && x < data.L) ? data.h_jump : 0.0;
        return step + data.lambda * x;
    });
}

namespace {

// Edges carrying an atom of the measure Du - w. The relative rule (10x the
// median edge magnitude) is floored by an absolute one (atom mass above
// 1e-6 of the data range) so that roundoff on atom-free fields cannot
// promote noise edges to jumps.
std::vector<int> detect_jump_edges(const ScalarField& u, const VectorField& w,
                                   const ScalarField& f) {
    const int n = static_cast<int>(u.size());
    const double h = u.grid().spacing(0);
    const VectorField g = gradient(u);

    std::vector<double> mags(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i)
        mags[static_cast<std::size_t>(i)] = std::abs(g.comp(0)[i] - w.comp(0)[i]);

    std::vector<double> sorted = mags;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];

    const auto [fmin, fmax] = std::minmax_element(f.values().begin(), f.values().end());
    const double scale = std::max(*fmax - *fmin, 1e-12);

    std::vector<int> edges;
    for (int i = 0; i + 1 < n; ++i) {
        const double m = mags[static_cast<std::size_t>(i)];
        if (m > 10.0 * median && h * m > 1e-6 * scale) edges.push_back(i);
    }
    return edges;
}

}  // namespace

double Certificate1D::max_residual() const {
    return std::max({r_boundary, r_linf, r_l1, r_pairing, r_sign});
}

Certificate1D build_certificate(const ScalarField& u, const VectorField& w,
                                const ScalarField& f, double alpha, double beta) {
    if (u.grid().dims() != 1)
        throw std::invalid_argument("build_certificate: only 1D fields are supported");
    check_same_grid(u.grid(), f.grid(), "build_certificate");
    check_same_grid(u.grid(), w.grid(), "build_certificate");

    const int n = static_cast<int>(u.size());
    const double h = u.grid().spacing(0);

    // phi at left cell edges: phi[0] = 0, phi[j+1] = phi[j] + h*(u_j - f_j),
    // so the discrete gradient of phi is exactly u - f.
    ScalarField phi(u.grid());
    double run = 0.0;
    for (int j = 0; j < n; ++j) {
        phi[j] = run;
        run += h * (u[j] - f[j]);
    }
    const double phi_right = run;

    Certificate1D cert{std::move(phi)};
    cert.r_boundary = std::abs(phi_right);

    double max_abs = std::abs(phi_right), l1 = 0.0, pair = 0.0;
    for (int j = 0; j < n; ++j) {
        max_abs = std::max(max_abs, std::abs(cert.phi[j]));
        l1 += std::abs(cert.phi[j]);
        pair += cert.phi[j] * w.comp(0)[j];
    }
    l1 *= h;
    pair *= h;
    cert.r_linf = std::max(max_abs - alpha, 0.0);
    cert.r_l1 = std::max(l1 - beta, 0.0);

    const double wmax = w.max_magnitude();
    cert.r_pairing = (wmax > 0.0) ? std::abs(pair - beta * wmax) : 0.0;

    // Sign consistency of (opt2): pointwise at detected jump atoms, plus the
    // integral identity <phi, Du - w> = alpha*||Du - w||_M, which (given
    // ||phi||_inf <= alpha) is equivalent to phi agreeing with the polar of
    // the measure on all of its support, jumps and density part alike.
    const VectorField g = gradient(u);
    double sign_defect = 0.0;
    for (int i : detect_jump_edges(u, w, f)) {
        const double s = (g.comp(0)[i] - w.comp(0)[i]) > 0.0 ? 1.0 : -1.0;
        sign_defect = std::max(sign_defect, std::abs(cert.phi[i + 1] - alpha * s));
    }
    double pair_g = 0.0, mass_g = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double gi = g.comp(0)[i] - w.comp(0)[i];
        pair_g += cert.phi[i + 1] * gi;
        mass_g += std::abs(gi);
    }
    {
        // the zeroed trailing gradient still pairs -w against the boundary edge
        const double gi = -w.comp(0)[n - 1];
        pair_g += phi_right * gi;
        mass_g += std::abs(gi);
    }
    cert.r_sign = std::max(sign_defect, std::abs(h * pair_g - alpha * h * mass_g));
    return cert;
}

double affine_structure_deviation(const ScalarField& u, const VectorField& w,
                                  const ScalarField& f, double activity_tol) {
    if (u.grid().dims() != 1)
        throw std::invalid_argument("affine_structure_deviation: only 1D fields are supported");
    check_same_grid(u.grid(), f.grid(), "affine_structure_deviation");
    check_same_grid(u.grid(), w.grid(), "affine_structure_deviation");

    const int n = static_cast<int>(u.size());
    const VectorField g = gradient(u);
    const auto jumps = detect_jump_edges(u, w, f);
    const double wmax = w.max_magnitude();

    double worst = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(u[i] - f[i]) <= activity_tol) continue;
        if (std::abs(u[i + 1] - f[i + 1]) <= activity_tol) continue;
        if (std::binary_search(jumps.begin(), jumps.end(), i)) continue;
        worst = std::max(worst, std::abs(std::abs(g.comp(0)[i]) - wmax));
    }
    return (wmax > 1e-12) ? worst / wmax : worst;
}

}  // namespace tvlinf
