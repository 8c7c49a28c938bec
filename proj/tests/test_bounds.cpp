#include <doctest.h>

#include <cmath>

#include "chemobound/bounds.hpp"
#include "chemobound/cascade.hpp"
#include "chemobound/rng.hpp"
#include "oracles.hpp"

using namespace chemobound;

TEST_CASE("pure power case reduces to the closed form") {
    const OsgoodResult r = osgood_lower_bound(1.0, 0.0, 0.0, 2.0, 1.5, 1.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.error <= 1e-8);

    Rng rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        const double E8 = rng.log_uniform(1e-3, 1e3);
        const double gamma = rng.uniform(1.05, 4.0);
        const double phi0 = rng.log_uniform(1e-2, 1e4);
        const double closed = std::pow(phi0, 1.0 - gamma) / (E8 * (gamma - 1.0));
        const OsgoodResult q = osgood_lower_bound(E8, 0.0, 0.0, gamma, 1.0, phi0);
        CHECK(q.value == doctest::Approx(closed).epsilon(1e-8));
    }
}

TEST_CASE("mixed case agrees with the brute-force oracle") {
    // oracle: composite Simpson in the log variable over [1, 1e8] with 1e7
    // panels, plus the analytic tail sandwich midpoint
    const double E8 = 1.0, E9 = 1.0, E5 = 1.0, gamma = 2.0, delta = 1.5, phi0 = 1.0;
    auto psi = [&](double tau) {
        return E8 * std::pow(tau, gamma) + E9 * std::pow(tau, delta) + E5;
    };
    const double cut = 1e8;
    const double main = oracles::simpson_log([&](double tau) { return 1.0 / psi(tau); }, phi0,
                                             cut, 10'000'000);
    const double eprime = E9 * std::pow(cut, delta - gamma) + E5 * std::pow(cut, -gamma);
    const double tail_hi = std::pow(cut, 1.0 - gamma) / (E8 * (gamma - 1.0));
    const double tail_lo = std::pow(cut, 1.0 - gamma) / ((E8 + eprime) * (gamma - 1.0));
    const double oracle = main + 0.5 * (tail_hi + tail_lo);

    const OsgoodResult r = osgood_lower_bound(E8, E9, E5, gamma, delta, phi0);
    CHECK(r.value == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("integrand scaling divides the bound exactly") {
    const OsgoodResult base = osgood_lower_bound(0.7, 0.3, 0.2, 1.8, 1.3, 2.0);
    for (double c : {2.0, 10.0, 0.25}) {
        const OsgoodResult scaled = osgood_lower_bound(0.7 * c, 0.3 * c, 0.2 * c, 1.8, 1.3, 2.0);
        CHECK(scaled.value * c == doctest::Approx(base.value).epsilon(1e-12));
    }
}

TEST_CASE("subcritical exponent is rejected") {
    CHECK_THROWS_AS(osgood_lower_bound(1.0, 0.0, 0.0, 1.0, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(osgood_lower_bound(1.0, 0.0, 0.0, 0.8, 0.5, 1.0), std::domain_error);
}

TEST_CASE("explicit bound without the lower-order terms") {
    const double T = explicit_lower_bound(1.0, 0.0, 0.0, 2.0, 1.5, 8.5, 1.0);
    CHECK(T == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("explicit bound never exceeds the integral bound across cascades") {
    Rng rng(31338);
    int done = 0;
    while (done < 100) {
        const int n = rng.uniform_int(1, 3);
        const double m1 = rng.uniform(-1.0, 1.0);
        const double m2 = rng.uniform(std::max(1.0, m1 + 2.0 / n) + 0.05, m1 + 4.0);
        if (!validate_blowup_restrictions(m1, m2, n).ok) continue;
        Problem prob;
        try {
            prob = Problem::validated(DomainGeometry::ball(n, rng.uniform(0.5, 1.5)), m1, m2,
                                      rng.log_uniform(0.1, 1.5), rng.log_uniform(0.2, 5.0),
                                      InitialData::constant(rng.log_uniform(0.3, 4.0)), 0.0, 0.0,
                                      0.0, rng.log_uniform(0.5, 4.0));
        } catch (const SpecError&) {
            continue;
        }
        const double pbar =
            compute_pbar(prob.m1, prob.m2, prob.geom.dim, prob.p0, prob.q1, prob.q2);
        const ExponentSet e = compute_exponents(prob.m1, prob.m2, prob.geom.dim, prob.p0, pbar);
        const EnergyConstants en = compute_energy_constants(prob, pbar);
        const double phi0 = initial_phi(prob.u0, prob.geom, pbar, prob.alpha);
        const OdiConstants odi = compute_odi_constants(prob, e, en, phi0);

        const OsgoodResult to = osgood_lower_bound(odi.E8, odi.E9, en.E5, e.gamma, e.delta, phi0);
        const double te = explicit_lower_bound(odi.E8, odi.E9, odi.E10, e.gamma, e.delta, pbar,
                                               phi0);
        CHECK(te <= to.value + to.error);
        CHECK(to.value > 0.0);
        CHECK(std::isfinite(to.value));
        ++done;
    }
}

TEST_CASE("grid energy converges at second order to the continuum value") {
    const DomainGeometry geom = DomainGeometry::ball(2, 1.0);
    const InitialData u0 = InitialData::gaussian(2.0, 0.4);
    const double p = 8.5, alpha = 1.0;
    const double exact = initial_phi(u0, geom, p, alpha);

    double errs[3];
    int idx = 0;
    for (int N : {512, 1024, 2048}) {
        const RadialGrid g = build_grid(geom, N);
        std::vector<double> u(N);
        for (int i = 0; i < N; ++i) u[i] = u0(g.center_r[i], 1.0);
        errs[idx++] = std::abs(phi0_of_field(u, g, p, alpha) - exact);
    }
    const double order1 = std::log2(errs[0] / errs[1]);
    const double order2 = std::log2(errs[1] / errs[2]);
    CHECK(order1 >= 1.9);
    CHECK(order2 >= 1.9);
}

TEST_CASE("grid energy of the bump matches the high-resolution oracle") {
    const DomainGeometry geom = DomainGeometry::ball(2, 1.0);
    const InitialData u0 = InitialData::gaussian(2.0, 0.4);
    const double p = 8.5, alpha = 1.0;

    const double oracle = oracles::simpson(
                              [&](double r) { return std::pow(u0(r, 1.0) + alpha, p) * r; }, 0.0,
                              1.0, 100000) *
                          geom.sphere_area() / p;

    const int N = 4096;
    const RadialGrid g = build_grid(geom, N);
    std::vector<double> u(N);
    for (int i = 0; i < N; ++i) u[i] = u0(g.center_r[i], 1.0);
    CHECK(phi0_of_field(u, g, p, alpha) == doctest::Approx(oracle).epsilon(1e-6));

    // constant data: exact value |Omega| (M+alpha)^p / p
    std::vector<double> uc(N, 3.0);
    CHECK(phi0_of_field(uc, g, p, alpha) ==
          doctest::Approx(geom.measure() * std::pow(4.0, p) / p).epsilon(1e-13));
}
