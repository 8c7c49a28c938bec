#include <doctest.h>

#include <cmath>

#include "chemobound/problem.hpp"
#include "oracles.hpp"

using namespace chemobound;

TEST_CASE("blow-up restriction checks") {
    CHECK(validate_blowup_restrictions(1.0, 2.5, 2).ok);

    const BlowupCheck boundary = validate_blowup_restrictions(1.0, 2.0, 2);
    CHECK_FALSE(boundary.ok);
    REQUIRE(boundary.violations.size() == 1);
    CHECK(boundary.violations[0] == "m2>m1+2/n");

    // m1 = 1.2, m2 = 3, n = 1 violates m1 <= 1 and, since m1 + 2/n = 3.2,
    // the gap condition as well; both must be named
    const BlowupCheck m1fail = validate_blowup_restrictions(1.2, 3.0, 1);
    CHECK_FALSE(m1fail.ok);
    REQUIRE(m1fail.violations.size() == 2);
    CHECK(m1fail.violations[0] == "m2>m1+2/n");
    CHECK(m1fail.violations[1] == "m1<=1");

    const BlowupCheck single = validate_blowup_restrictions(1.2, 3.5, 1);
    CHECK_FALSE(single.ok);
    REQUIRE(single.violations.size() == 1);
    CHECK(single.violations[0] == "m1<=1");
}

TEST_CASE("default free parameters sit inside the open ranges") {
    const FreeParameters a = default_free_parameters(1.0, 2.5, 2);
    CHECK(a.p0 == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(a.q1 == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(a.q2 == doctest::Approx(3.0).epsilon(1e-15));

    const FreeParameters b = default_free_parameters(0.0, 3.0, 1);
    CHECK(b.p0 == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(b.q1 == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(b.q2 == doctest::Approx(2.5).epsilon(1e-15));

    for (int n = 1; n <= 3; ++n) {
        for (double m1 : {-1.5, 0.0, 1.0}) {
            for (double m2 : {m1 + 2.0 / n + 0.3, m1 + 4.0}) {
                if (!validate_blowup_restrictions(m1, m2, n).ok) continue;
                const FreeParameters f = default_free_parameters(m1, m2, n);
                CHECK(f.p0 > 0.5 * n * (m2 - m1));
                CHECK(f.q1 > n + 2);
                CHECK(f.q2 > 0.5 * (n + 2));
            }
        }
    }
}

TEST_CASE("mean mass of constants is exact") {
    for (int n = 1; n <= 3; ++n) {
        const DomainGeometry geom = DomainGeometry::ball(n, 1.5);
        CHECK(mean_mass(InitialData::constant(3.0), geom) == 3.0);
    }
    CHECK(mean_mass(InitialData::constant(3.0), DomainGeometry::interval(2.0)) == 3.0);
}

TEST_CASE("mean mass of the gaussian bump matches the quadrature oracle") {
    const DomainGeometry geom = DomainGeometry::ball(2, 1.0);
    const InitialData u0 = InitialData::gaussian(2.0, 0.4);

    // oracle: composite Simpson of u0(r) r dr at 1e5 nodes, times 2*pi/|Omega|
    const double oracle =
        oracles::simpson([&](double r) { return u0(r, 1.0) * r; }, 0.0, 1.0, 100000) *
        geom.sphere_area() / geom.measure();
    const double frozen = 0.31938225467640713;  // oracle value, frozen
    CHECK(oracle == doctest::Approx(frozen).epsilon(1e-12));
    CHECK(mean_mass(u0, geom) == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("trivial initial data is rejected") {
    const DomainGeometry geom = DomainGeometry::ball(2, 1.0);
    CHECK_THROWS_AS(mean_mass(InitialData::constant(0.0), geom), std::invalid_argument);
    CHECK_THROWS_AS(mean_mass(InitialData::table({0.0, 0.0, 0.0}), geom), std::invalid_argument);
    CHECK_THROWS_AS(mean_mass(InitialData::table({0.1, -0.2, 0.3}), geom), std::invalid_argument);
}

TEST_CASE("mean mass is positively homogeneous in the data") {
    const DomainGeometry geom = DomainGeometry::ball(2, 1.0);
    const double base = mean_mass(InitialData::gaussian(2.0, 0.4), geom);
    for (double c : {0.5, 3.0, 17.0}) {
        const double scaled = mean_mass(InitialData::gaussian(2.0 * c, 0.4), geom);
        CHECK(scaled == doctest::Approx(c * base).epsilon(1e-12));
    }
}

TEST_CASE("table data: exact piecewise-linear radial moment") {
    const DomainGeometry geom = DomainGeometry::interval(1.0);
    // u0(r) = 1 + r on [0, 1]: mean = integral (1+r) dr / 1 = 1.5
    const double m = mean_mass(InitialData::table({1.0, 1.5, 2.0}), geom);
    CHECK(m == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("validated problem re-checks every range constraint") {
    const DomainGeometry geom = DomainGeometry::ball(2, 1.0);
    const Problem p =
        Problem::validated(geom, 1.0, 2.5, 1.0, 1.0, InitialData::constant(1.0));
    CHECK(p.p0 == doctest::Approx(2.5));
    CHECK(p.q1 == doctest::Approx(5.0));
    CHECK(p.q2 == doctest::Approx(3.0));
    CHECK(p.mass_mean == doctest::Approx(1.0));
    CHECK(validate_blowup_restrictions(p.m1, p.m2, p.geom.dim).ok);
    CHECK(p.p0 > 0.5 * p.geom.dim * (p.m2 - p.m1));
    CHECK(p.q1 > p.geom.dim + 2);
    CHECK(p.q2 > 0.5 * (p.geom.dim + 2));
    CHECK(p.mass_mean > 0.0);

    // all violations are reported at once
    try {
        Problem::validated(geom, 1.2, 1.5, -1.0, 1.0, InitialData::constant(1.0));
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(e.violations().size() >= 3);
    }

    CHECK_THROWS_AS(
        Problem::validated(geom, 1.0, 2.5, 1.0, 1.0, InitialData::constant(1.0), 1.4),
        SpecError);  // p0 below the admissible range
}

TEST_CASE("geometry measures") {
    CHECK(DomainGeometry::interval(1.0).measure() == doctest::Approx(2.0));
    CHECK(DomainGeometry::ball(2, 1.0).measure() ==
          doctest::Approx(3.14159265358979323846).epsilon(1e-15));
    CHECK(DomainGeometry::ball(3, 2.0).measure() ==
          doctest::Approx(32.0 * 3.14159265358979323846 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(DomainGeometry::interval(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(DomainGeometry::checked(2, DomainShape::interval, 1.0),
                    std::invalid_argument);
}
