#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "tvlinf/diff_ops.hpp"
#include "tvlinf/energy.hpp"
#include "tvlinf/field.hpp"

using namespace tvlinf;

TEST_CASE("GridSpec enforces sizes and spacing") {
    CHECK_THROWS_AS(GridSpec::line(1), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::line(8, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::plane(4, 1), std::invalid_argument);
    const GridSpec g = GridSpec::plane(4, 3, 0.5, 0.25);
    CHECK(g.point_count() == 12);
    CHECK(g.cell_volume() == doctest::Approx(0.125));
    CHECK(g.index(3, 2) == 11);
}

TEST_CASE("fields validate their payload") {
    const GridSpec g = GridSpec::line(4);
    CHECK_THROWS_AS(ScalarField(g, std::vector<double>{1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(ScalarField(g, std::vector<double>{1.0, 2.0, NAN, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(VectorField(g, {{1.0, 2.0, 3.0, 4.0}, {0.0, 0.0, 0.0, 0.0}}),
                    std::invalid_argument);  // 1D grid, two components

    const VectorField w(GridSpec::plane(2, 2), {{3.0, 0, 0, 0}, {4.0, 0, 0, 0}});
    CHECK(w.magnitude(0) == doctest::Approx(5.0));
    CHECK(w.max_magnitude() == doctest::Approx(5.0));
}

TEST_CASE("RegParams validation") {
    const GridSpec g = GridSpec::line(8);
    RegParams p;
    p.alpha = 0.0;
    CHECK_THROWS_AS(p.validate(g), std::invalid_argument);
    p.alpha = 1.0;
    p.beta = -1.0;
    CHECK_THROWS_AS(p.validate(g), std::invalid_argument);
    p.beta = 1.0;
    p.beta_map = ScalarField(g, 1.0);
    CHECK_NOTHROW(p.validate(g));
    p.beta_map = ScalarField(GridSpec::line(9), 1.0);
    CHECK_THROWS_AS(p.validate(g), std::invalid_argument);
    p.beta_map = ScalarField(g, 0.0);
    CHECK_THROWS_AS(p.validate(g), std::invalid_argument);
}

TEST_CASE("tvlinf energy on hand-evaluated instances") {
    RegParams p;
    p.alpha = 1.0;
    p.beta = 2.0;

    SUBCASE("all terms vanish") {
        const GridSpec g = GridSpec::plane(4, 4);
        CHECK(energy_tvlinf(ScalarField(g), VectorField(g), ScalarField(g), p) == 0.0);
    }

    SUBCASE("constant w on a 4x4 unit grid") {
        const GridSpec g = GridSpec::plane(4, 4);
        VectorField w(g);
        for (auto& v : w.comp(0)) v = 1.0;
        // alpha * 16 * 1 + beta * 1 = 18
        CHECK(energy_tvlinf(ScalarField(g), w, ScalarField(g), p) == doctest::Approx(18.0));
    }

    SUBCASE("unit ramp with u = f") {
        const int n = 37;
        const double h = 0.17;
        const GridSpec g = GridSpec::line(n, h);
        std::vector<double> ramp(n);
        for (int i = 0; i < n; ++i) ramp[i] = i * h;
        const ScalarField u(g, ramp);
        RegParams q;
        q.alpha = 1.0;
        q.beta = 10.0;
        CHECK(energy_tvlinf(u, VectorField(g), u, q) == doctest::Approx((n - 1) * h));
    }

    SUBCASE("grid mismatch") {
        const GridSpec a = GridSpec::line(8), b = GridSpec::line(9);
        CHECK_THROWS_AS(energy_tvlinf(ScalarField(a), VectorField(a), ScalarField(b), p),
                        std::invalid_argument);
    }
}

TEST_CASE("tv and tgv energies") {
    SUBCASE("zero data") {
        const GridSpec g = GridSpec::line(16);
        CHECK(energy_tv(ScalarField(g), ScalarField(g), 2.0) == 0.0);
    }

    SUBCASE("single step: alpha * |jump|, spacing-independent") {
        for (double h : {1.0, 0.05}) {
            const int n = 32;
            const GridSpec g = GridSpec::line(n, h);
            std::vector<double> v(n, 0.0);
            for (int i = n / 2; i < n; ++i) v[i] = 1.0;
            const ScalarField u(g, v);
            CHECK(energy_tv(u, u, 2.0) == doctest::Approx(2.0));
        }
    }

    SUBCASE("tgv with w = grad u drops the first-order term") {
        std::mt19937 rng(7);
        const GridSpec g = GridSpec::plane(9, 8, 0.3);
        const ScalarField u = oracle::random_field(g, rng);
        const ScalarField f = oracle::random_field(g, rng);
        const VectorField w = gradient(u);
        double fid = 0.0;
        for (std::int64_t i = 0; i < u.size(); ++i) fid += (f[i] - u[i]) * (f[i] - u[i]);
        fid *= 0.5 * g.cell_volume();
        const double expected = fid + (energy_tgv(u, w, f, 5.0, 1.5) - fid);
        // alpha-independence is the cleanest witness that ||grad u - w|| = 0
        CHECK(energy_tgv(u, w, f, 5.0, 1.5) == doctest::Approx(energy_tgv(u, w, f, 99.0, 1.5)));
        CHECK(energy_tgv(u, w, f, 5.0, 1.5) == doctest::Approx(expected));
    }
}

TEST_CASE("energy matches an independent direct evaluation") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const GridSpec g = (trial % 2 == 0) ? GridSpec::plane(7, 6, 0.4)
                                            : GridSpec::line(23, 0.11);
        const ScalarField u = oracle::random_field(g, rng);
        const ScalarField f = oracle::random_field(g, rng);
        const VectorField w = oracle::random_vector_field(g, rng);
        RegParams p;
        p.alpha = 0.7;
        p.beta = 1.3;
        CHECK(energy_tvlinf(u, w, f, p) ==
              doctest::Approx(oracle::direct_energy_tvlinf(u, w, f, 0.7, 1.3)).epsilon(1e-12));
    }
}

TEST_CASE("energy_tvlinf is jointly convex in (u, w)") {
    std::mt19937 rng(5);
    const GridSpec g = GridSpec::plane(6, 5, 0.7);
    const ScalarField f = oracle::random_field(g, rng);
    RegParams p;
    p.alpha = 0.9;
    p.beta = 0.4;
    for (int trial = 0; trial < 200; ++trial) {
        const ScalarField ua = oracle::random_field(g, rng), ub = oracle::random_field(g, rng);
        const VectorField wa = oracle::random_vector_field(g, rng),
                          wb = oracle::random_vector_field(g, rng);
        ScalarField um(g);
        VectorField wm(g);
        for (std::int64_t i = 0; i < g.point_count(); ++i) {
            um[i] = 0.5 * (ua[i] + ub[i]);
            for (int k = 0; k < g.dims(); ++k)
                wm.comp(k)[i] = 0.5 * (wa.comp(k)[i] + wb.comp(k)[i]);
        }
        const double em = energy_tvlinf(um, wm, f, p);
        const double avg = 0.5 * energy_tvlinf(ua, wa, f, p) + 0.5 * energy_tvlinf(ub, wb, f, p);
        CHECK(em <= avg + 1e-10);
    }
}

TEST_CASE("w = 0 reduces the energy to the ROF objective exactly") {
    std::mt19937 rng(11);
    const GridSpec g = GridSpec::plane(8, 8, 0.25);
    const ScalarField u = oracle::random_field(g, rng);
    const ScalarField f = oracle::random_field(g, rng);
    RegParams p;
    p.alpha = 0.8;
    p.beta = 3.0;
    double fid = 0.0;
    for (std::int64_t i = 0; i < u.size(); ++i) fid += (f[i] - u[i]) * (f[i] - u[i]);
    fid *= 0.5 * g.cell_volume();
    CHECK(energy_tvlinf(u, VectorField(g), f, p) ==
          doctest::Approx(fid + 0.8 * total_variation(u)).epsilon(1e-14));
}

TEST_CASE("infimal value is sandwiched by TV (upper bound exact)") {
    std::mt19937 rng(3);
    const GridSpec g = GridSpec::line(40, 0.1);
    for (int trial = 0; trial < 10; ++trial) {
        const ScalarField u = oracle::random_field(g, rng);
        const double alpha = 0.6, beta = 0.2;
        const double tv = total_variation(u);

        // infimal value over w via the clamp parametrisation (optimal w for a
        // given sup level t clamps gradient magnitudes at t)
        const VectorField gu = gradient(u);
        std::vector<double> mags(static_cast<std::size_t>(g.point_count()));
        double mmax = 0.0;
        for (std::int64_t i = 0; i < g.point_count(); ++i) {
            mags[static_cast<std::size_t>(i)] = gu.magnitude(i);
            mmax = std::max(mmax, mags[static_cast<std::size_t>(i)]);
        }
        const auto value = [&](double t) {
            double mass = 0.0;
            for (double m : mags) mass += std::max(m - t, 0.0);
            return alpha * g.cell_volume() * mass + beta * t;
        };
        const double tstar = oracle::golden_section_min(0.0, mmax, 1e-12 + 1e-12 * mmax, value);
        const double infimal = value(tstar);

        CHECK(infimal <= alpha * tv + 1e-12);
        if (tv > 0.0) CHECK(infimal > 0.0);
    }
}
