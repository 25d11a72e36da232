#include "tvlinf/adaptive_beta.hpp"

#include <stdexcept>

#include "tvlinf/diff_ops.hpp"

namespace tvlinf {

namespace {

ScalarField rule(const ScalarField& base, double c, double eps) {
    if (!(c > 0.0)) throw std::invalid_argument("adaptive beta: c must be positive");
    if (!(eps > 0.0)) throw std::invalid_argument("adaptive beta: eps must be positive");
    const VectorField g = gradient(base);
    ScalarField beta(base.grid());
    const std::int64_t n = base.size();
    for (std::int64_t i = 0; i < n; ++i) beta[i] = c / (g.magnitude(i) + eps);
    return beta;
}

}  // namespace

ScalarField beta_from_data(const ScalarField& f, double c, double eps, double sigma,
                           int window) {
    return rule(gaussian_filter(f, sigma, window), c, eps);
}

ScalarField beta_from_reference(const ScalarField& u_ref, double c, double eps) {
    return rule(u_ref, c, eps);
}

}  // namespace tvlinf
