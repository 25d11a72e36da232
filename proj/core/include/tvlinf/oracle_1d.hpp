#pragma once

#include "tvlinf/field.hpp"

namespace tvlinf {

/// Piecewise data on (-L, L): f(x) = h_jump * X_(0,L)(x) + lambda * x.
/// lambda == 0 gives the pure step, lambda > 0 the affine step.
struct StepData {
    double L = 1.0;
    double h_jump = 1.0;
    double lambda = 0.0;

    void validate() const;
};

enum class Region { YellowAffineJump, TVRegime, OtherThesisRegion };

/// Parameter-plane classification for StepData. YellowAffineJump requires
/// lambda > 0 and the four inequalities
///   beta < alpha*L + lambda*L^3/6,   beta > 4*alpha*L/3 - h*L^2/6,
///   beta > 2*alpha*L/3,              beta < 4*alpha*L/3;
/// TVRegime is beta >= alpha * |domain| = alpha * 2L. Everything else is
/// referred to as OtherThesisRegion and carries no closed form here.
Region classify_region(const StepData& data, double alpha, double beta);

/// Closed-form minimiser for the YellowAffineJump region:
///   u(x) = c1*x + h - c2 on (0,L),  u(x) = c1*x + c2 on (-L,0),
///   c1 = 6(alpha*L - beta)/L^3 + lambda, c2 = (4*alpha*L - 3*beta)/L^2,
/// with w identically c1 and dual function
///   phi(x) = (c1 - lambda)*x^2/2 - c2*|x| + alpha.
struct YellowSolution {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double h_jump = 0.0;
    double lambda = 0.0;

    double operator()(double x) const;
    double dual(double x) const;
    double w_mag() const { return c1; }
    double jump_size() const { return h_jump - 2.0 * c2; }
};

/// Throws std::domain_error unless classify_region says YellowAffineJump.
YellowSolution exact_solution_yellow(const StepData& data, double alpha, double beta);

/// Closed-form 1D ROF minimiser for the pure step (lambda == 0): plateaus at
/// delta and h - delta with delta = min(alpha/L, h/2); for alpha >= h*L/2 the
/// solution is flat at the mean h/2.
struct StepTvSolution {
    double lower = 0.0;
    double upper = 0.0;
    double eval(double x) const { return x > 0.0 ? upper : lower; }
};
StepTvSolution exact_solution_tv_step(const StepData& data, double alpha);

/// Cell-centred sampling of the data on (-L, L): n points at
/// x_i = -L + (i + 1/2) * h, h = 2L/n, so for even n the jump sits exactly
/// between the two centre samples. Requires n >= 16.
ScalarField sample_data(const StepData& data, int n);

/// Sample an arbitrary profile with the same cell-centred convention.
template <class F>
ScalarField sample_profile(double L, int n, F&& fn) {
    const double h = 2.0 * L / n;
    GridSpec g = GridSpec::line(n, h);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = fn(-L + (i + 0.5) * h);
    return ScalarField(g, std::move(v));
}

/// Numerical optimality-certificate check for the 1D problem. phi is stored
/// at the left cell edges (phi[0] = 0 at the left boundary), so the forward
/// difference of phi reproduces u - f exactly. Residuals:
///   r_boundary  |phi| at the right boundary
///   r_linf      (max |phi| - alpha)_+
///   r_l1        (||phi||_1 - beta)_+
///   r_pairing   |<phi, w> - beta*||w||_inf| when w != 0, else 0
///   r_sign      sign consistency with Du - w: the worst pointwise defect
///               |phi - alpha*sign(.)| over detected jump edges, combined
///               with the integral defect |<phi, Du-w> - alpha*||Du-w||_M|
///               that covers the density part of the measure
struct Certificate1D {
    ScalarField phi;
    double r_boundary = 0.0;
    double r_linf = 0.0;
    double r_l1 = 0.0;
    double r_pairing = 0.0;
    double r_sign = 0.0;

    double max_residual() const;
};

Certificate1D build_certificate(const ScalarField& u, const VectorField& w,
                                const ScalarField& f, double alpha, double beta);

/// Worst deviation of |u'| from ||w||_inf over edges where the solution is
/// active (|u - f| > activity_tol at both ends) and which are not jump edges.
/// Relative to ||w||_inf when w is nonzero, absolute otherwise. The trailing
/// edge has no forward difference and is skipped.
double affine_structure_deviation(const ScalarField& u, const VectorField& w,
                                  const ScalarField& f, double activity_tol);

}  // namespace tvlinf
