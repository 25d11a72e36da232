#include "tvlinf/energy.hpp"

#include <cmath>

#include "tensor_ops.hpp"
#include "tvlinf/diff_ops.hpp"

namespace tvlinf {

namespace {

double fidelity(const ScalarField& u, const ScalarField& f) {
    double s = 0.0;
    const std::int64_t n = u.size();
    for (std::int64_t i = 0; i < n; ++i) {
        const double d = f[i] - u[i];
        s += d * d;
    }
    return 0.5 * u.grid().cell_volume() * s;
}

double radon_distance(const VectorField& a, const VectorField& b) {
    double s = 0.0;
    const std::int64_t n = a.grid().point_count();
    const int d = a.components();
    for (std::int64_t i = 0; i < n; ++i) {
        double m = 0.0;
        for (int k = 0; k < d; ++k) {
            const double v = a.comp(k)[i] - b.comp(k)[i];
            m += v * v;
        }
        s += std::sqrt(m);
    }
    return a.grid().cell_volume() * s;
}

}  // namespace

double energy_tvlinf(const ScalarField& u, const VectorField& w, const ScalarField& f,
                     const RegParams& p) {
    check_same_grid(u.grid(), f.grid(), "energy_tvlinf");
    check_same_grid(u.grid(), w.grid(), "energy_tvlinf");
    p.validate(u.grid());

    const VectorField g = gradient(u);
    double sup = 0.0;
    const std::int64_t n = u.size();
    if (p.beta_map) {
        const ScalarField& bm = *p.beta_map;
        for (std::int64_t i = 0; i < n; ++i) sup = std::max(sup, bm[i] * w.magnitude(i));
    } else {
        sup = p.beta * w.max_magnitude();
    }
    return fidelity(u, f) + p.alpha * radon_distance(g, w) + sup;
}

double energy_tv(const ScalarField& u, const ScalarField& f, double alpha) {
    check_same_grid(u.grid(), f.grid(), "energy_tv");
    return fidelity(u, f) + alpha * total_variation(u);
}

double energy_tgv(const ScalarField& u, const VectorField& w, const ScalarField& f,
                  double alpha, double beta) {
    check_same_grid(u.grid(), f.grid(), "energy_tgv");
    check_same_grid(u.grid(), w.grid(), "energy_tgv");
    const VectorField g = gradient(u);
    const detail::SymTensorField ew = detail::sym_gradient(w);
    double sym_mass = 0.0;
    const std::int64_t n = u.size();
    for (std::int64_t i = 0; i < n; ++i) sym_mass += ew.norm_at(i);
    sym_mass *= u.grid().cell_volume();
    return fidelity(u, f) + alpha * radon_distance(g, w) + beta * sym_mass;
}

double total_variation(const ScalarField& u) {
    const VectorField g = gradient(u);
    double s = 0.0;
    const std::int64_t n = u.size();
    for (std::int64_t i = 0; i < n; ++i) s += g.magnitude(i);
    return u.grid().cell_volume() * s;
}

}  // namespace tvlinf
