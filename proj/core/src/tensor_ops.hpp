#pragma once

// Internal helpers shared by the TGV energy and solver: the symmetrised
// gradient of a vector field and its negative adjoint. In 1D E w is the plain
// derivative of the single component; in 2D the three independent components
// are stored as [e_xx, e_yy, e_xy], and pointwise norms carry the factor 2 on
// the off-diagonal entry.

#include <cmath>
#include <vector>

#include "tvlinf/field.hpp"

namespace tvlinf::detail {

struct SymTensorField {
    GridSpec grid;
    std::vector<std::vector<double>> comps;  // size 1 (1D) or 3 (2D)

    explicit SymTensorField(const GridSpec& g)
        : grid(g),
          comps(g.dims() == 1 ? 1 : 3,
                std::vector<double>(static_cast<std::size_t>(g.point_count()), 0.0)) {}

    double norm_at(std::int64_t i) const {
        if (comps.size() == 1) return std::abs(comps[0][i]);
        const double exx = comps[0][i], eyy = comps[1][i], exy = comps[2][i];
        return std::sqrt(exx * exx + eyy * eyy + 2.0 * exy * exy);
    }

    double max_norm() const {
        double m = 0.0;
        const std::int64_t n = grid.point_count();
        for (std::int64_t i = 0; i < n; ++i) m = std::max(m, norm_at(i));
        return m;
    }
};

// Forward difference of one scalar plane along `axis`, Neumann boundary.
void axis_forward_diff(const GridSpec& g, const std::vector<double>& in, int axis,
                       std::vector<double>& out);

// Negative adjoint of axis_forward_diff: <D_a u, p> = -<u, axis_div(p)>.
void axis_divergence(const GridSpec& g, const std::vector<double>& in, int axis,
                     std::vector<double>& out_accum);

SymTensorField sym_gradient(const VectorField& w);

// Adjoint pairing: <E w, q>_weighted = -<w, sym_divergence(q)>.
VectorField sym_divergence(const SymTensorField& q);

}  // namespace tvlinf::detail
