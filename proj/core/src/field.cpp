#include "tvlinf/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tvlinf {

namespace {

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

}  // namespace

GridSpec::GridSpec(int dims, std::array<int, 2> sizes, std::array<double, 2> spacing)
    : dims_(dims), sizes_(sizes), spacing_(spacing) {
    for (int a = 0; a < dims_; ++a) {
        if (sizes_[a] < 2) throw std::invalid_argument("GridSpec: sizes must be >= 2");
        if (!(spacing_[a] > 0.0) || !std::isfinite(spacing_[a]))
            throw std::invalid_argument("GridSpec: spacing must be positive");
    }
}

GridSpec GridSpec::line(int n, double spacing) {
    return GridSpec(1, {n, 1}, {spacing, 1.0});
}

GridSpec GridSpec::plane(int nx, int ny, double spacing) {
    return GridSpec(2, {nx, ny}, {spacing, spacing});
}

GridSpec GridSpec::plane(int nx, int ny, double hx, double hy) {
    return GridSpec(2, {nx, ny}, {hx, hy});
}

ScalarField::ScalarField(GridSpec grid, double fill)
    : grid_(grid), values_(static_cast<std::size_t>(grid.point_count()), fill) {
    if (!std::isfinite(fill)) throw std::invalid_argument("ScalarField: non-finite fill");
}

ScalarField::ScalarField(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != grid_.point_count())
        throw std::invalid_argument("ScalarField: value count does not match grid");
    check_finite(values_, "ScalarField");
}

VectorField::VectorField(GridSpec grid) : grid_(grid) {
    comps_.assign(grid_.dims(),
                  std::vector<double>(static_cast<std::size_t>(grid_.point_count()), 0.0));
}

VectorField::VectorField(GridSpec grid, std::vector<std::vector<double>> components)
    : grid_(grid), comps_(std::move(components)) {
    if (static_cast<int>(comps_.size()) != grid_.dims())
        throw std::invalid_argument("VectorField: component count does not match grid dims");
    for (const auto& c : comps_) {
        if (static_cast<std::int64_t>(c.size()) != grid_.point_count())
            throw std::invalid_argument("VectorField: component size does not match grid");
        check_finite(c, "VectorField");
    }
}

double VectorField::magnitude(std::int64_t i) const {
    double s = 0.0;
    for (const auto& c : comps_) s += c[i] * c[i];
    return std::sqrt(s);
}

double VectorField::max_magnitude() const {
    double m = 0.0;
    const std::int64_t n = grid_.point_count();
    for (std::int64_t i = 0; i < n; ++i) m = std::max(m, magnitude(i));
    return m;
}

void RegParams::validate(const GridSpec& grid) const {
    if (!(alpha > 0.0)) throw std::invalid_argument("RegParams: alpha must be positive");
    if (beta_map) {
        check_same_grid(beta_map->grid(), grid, "RegParams.beta_map");
        for (double b : beta_map->values())
            if (!(b > 0.0)) throw std::invalid_argument("RegParams: beta must be positive everywhere");
    } else if (!(beta > 0.0)) {
        throw std::invalid_argument("RegParams: beta must be positive");
    }
    if (mu < 0.0) throw std::invalid_argument("RegParams: mu must be nonnegative");
    if (max_iters < 1) throw std::invalid_argument("RegParams: max_iters must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("RegParams: tol must be positive");
}

double norm_l2(const ScalarField& v) {
    double s = 0.0;
    for (double x : v.values()) s += x * x;
    return std::sqrt(v.grid().cell_volume() * s);
}

double norm_l2(const VectorField& v) {
    double s = 0.0;
    for (int k = 0; k < v.components(); ++k)
        for (double x : v.comp(k)) s += x * x;
    return std::sqrt(v.grid().cell_volume() * s);
}

void check_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (!(a == b))
        throw std::invalid_argument(std::string(where) + ": fields live on different grids");
}

}  // namespace tvlinf
