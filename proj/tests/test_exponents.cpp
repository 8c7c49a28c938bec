#include <doctest.h>

#include <cmath>

#include "chemobound/exponents.hpp"
#include "chemobound/problem.hpp"
#include "chemobound/rng.hpp"

using namespace chemobound;

// hand-evaluated branch sets for the two reference parameter points
TEST_CASE("pbar branches, reference point n=2") {
    const auto b = pbar_branches(1.0, 2.5, 2, 2.5, 5.0, 3.0);
    const double expected[9] = {2.5, 0.0, 0.5, 0.0, 1.0, 5.0, 7.5, -10.0, -3.0};
    for (int i = 0; i < 9; ++i) CHECK(b[i] == doctest::Approx(expected[i]).epsilon(1e-14));
    CHECK(compute_pbar(1.0, 2.5, 2, 2.5, 5.0, 3.0) == doctest::Approx(8.5).epsilon(1e-15));
}

TEST_CASE("pbar branches, reference point n=1") {
    const auto b = pbar_branches(0.0, 3.0, 1, 2.5, 4.0, 2.5);
    const double expected[9] = {2.5, 1.0, 0.0, 0.0, 0.5, 4.0, 8.0, 1.0, 1.0};
    for (int i = 0; i < 9; ++i) CHECK(b[i] == doctest::Approx(expected[i]).epsilon(1e-14));
    CHECK(compute_pbar(0.0, 3.0, 1, 2.5, 4.0, 2.5) == doctest::Approx(9.0).epsilon(1e-15));
}

TEST_CASE("m1 = 0 collapses both m1-weighted branches to 1") {
    for (double q1 : {3.5, 4.0, 9.0}) {
        for (double q2 : {1.6, 2.0, 7.0}) {
            const auto b = pbar_branches(0.0, 3.0, 1, 2.5, q1, q2);
            CHECK(b[7] == 1.0);
            CHECK(b[8] == 1.0);
        }
    }
}

TEST_CASE("singular branch denominators are rejected") {
    CHECK_THROWS_AS(compute_pbar(1.0, 2.5, 2, 2.5, 4.0, 3.0), std::domain_error);  // q1 = n+2
    CHECK_THROWS_AS(compute_pbar(1.0, 2.5, 2, 2.5, 5.0, 1.0), std::domain_error);  // q2 = 1
    CHECK_THROWS_AS(compute_pbar(1.0, 2.5, 2, 2.5, 5.0, 2.0), std::domain_error);  // q2=(n+2)/2
}

TEST_CASE("derived exponents at the n=2 reference point") {
    const ExponentSet e = compute_exponents(1.0, 2.5, 2, 2.5, 8.5);
    CHECK(e.k == doctest::Approx(40.0 / 17.0).epsilon(1e-14));
    CHECK(e.a1 == doctest::Approx(15.0 / 17.0).epsilon(1e-14));
    CHECK(e.a2 == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(e.a3 == doctest::Approx(0.15).epsilon(1e-14));
    CHECK(e.beta == doctest::Approx(15.0 / 17.0).epsilon(1e-14));
    CHECK(e.sigma == doctest::Approx(3.0 / 17.0).epsilon(1e-14));
    CHECK(e.delta == doctest::Approx(20.0 / 17.0).epsilon(1e-14));
    CHECK(e.gamma == doctest::Approx(17.0 / 14.0).epsilon(1e-14));
    CHECK(e.lambda == doctest::Approx(17.0 / 15.0).epsilon(1e-14));
    CHECK(check_exponent_relations(e, 1.0, 2.5, 2, 2.5).all_pass);
}

TEST_CASE("beta agrees with its direct quotient form") {
    // k a2 / 2 and the direct ratio are two routes to the same number
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(1, 3);
        const double m1 = rng.uniform(-2.0, 1.0);
        const double lo = std::max(1.0, m1 + 2.0 / n) + 0.01;
        const double m2 = rng.uniform(lo, m1 + 6.0);
        if (!validate_blowup_restrictions(m1, m2, n).ok) continue;
        const FreeParameters f = default_free_parameters(m1, m2, n);
        const double pbar = compute_pbar(m1, m2, n, f.p0, f.q1, f.q2);
        const ExponentSet e = compute_exponents(m1, m2, n, f.p0, pbar);

        const double s1 = pbar + m1 - 1.0;
        const double direct = ((pbar + m2 - 1.0) / (2.0 * f.p0) - 0.5) /
                              (s1 / (2.0 * f.p0) + 1.0 / n - 0.5);
        CHECK(std::abs(e.beta - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("tampered exponent sets fail the named relation") {
    ExponentSet e = compute_exponents(1.0, 2.5, 2, 2.5, 8.5);
    e.a3 = 1.5;
    RelationReport rep = check_exponent_relations(e, 1.0, 2.5, 2, 2.5);
    CHECK_FALSE(rep.all_pass);
    for (const auto& c : rep.checks)
        if (c.name == "a3_range") CHECK_FALSE(c.pass);

    e = compute_exponents(1.0, 2.5, 2, 2.5, 8.5);
    e.gamma = e.delta;
    rep = check_exponent_relations(e, 1.0, 2.5, 2, 2.5);
    CHECK_FALSE(rep.all_pass);
    for (const auto& c : rep.checks)
        if (c.name == "gamma_delta_order") CHECK_FALSE(c.pass);
}

TEST_CASE("pbar minus one equals the max branch exactly") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(1, 3);
        const double m1 = rng.uniform(-2.0, 1.0);
        const double m2 = rng.uniform(std::max(1.0, m1 + 2.0 / n) + 0.01, m1 + 6.0);
        if (!validate_blowup_restrictions(m1, m2, n).ok) continue;
        const FreeParameters f = default_free_parameters(m1, m2, n);
        const auto b = pbar_branches(m1, m2, n, f.p0, f.q1, f.q2);
        double mx = b[0];
        for (double x : b) mx = std::max(mx, x);
        CHECK(compute_pbar(m1, m2, n, f.p0, f.q1, f.q2) == mx + 1.0);
    }
}

// randomized sweep: every sampled admissible parameter set passes all eight
// relations (the machine-check analogue of the p >= pbar claim)
TEST_CASE("randomized relation sweep over the admissible region") {
    Rng rng(20240901);
    int done = 0;
    while (done < 1000) {
        const int n = rng.uniform_int(1, 3);
        const double m1 = rng.uniform(-2.0, 1.0);
        const double m2 = rng.uniform(std::max(1.0, m1 + 2.0 / n) + 0.01, m1 + 6.0);
        if (!validate_blowup_restrictions(m1, m2, n).ok) continue;
        // random admissible free parameters, not just the defaults
        const double p0 = 0.5 * n * (m2 - m1) + rng.log_uniform(0.01, 3.0);
        const double q1 = n + 2.0 + rng.log_uniform(0.01, 8.0);
        const double q2 = 0.5 * (n + 2.0) + rng.log_uniform(0.01, 8.0);
        const double pbar = compute_pbar(m1, m2, n, p0, q1, q2);
        const ExponentSet e = compute_exponents(m1, m2, n, p0, pbar);
        const RelationReport rep = check_exponent_relations(e, m1, m2, n, p0);
        if (!rep.all_pass) {
            CAPTURE(n);
            CAPTURE(m1);
            CAPTURE(m2);
            CAPTURE(p0);
            CAPTURE(q1);
            CAPTURE(q2);
        }
        REQUIRE(rep.all_pass);

        // definitional coherence: gamma, delta, sigma recompute from k, a3
        CHECK(e.sigma == e.k * e.a3 / 2.0);
        CHECK(e.delta == (pbar + m2 - 1.0) / pbar);
        CHECK(e.gamma == e.delta * (1.0 - e.a3) / (1.0 - e.sigma));
        CHECK(e.lambda > 0.0);
        ++done;
    }
}
