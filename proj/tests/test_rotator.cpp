#include "doctest.h"

#include "disquant/error.hpp"
#include "disquant/rotator.hpp"

using namespace disquant;

TEST_CASE("closed-form rates for the default rotator")
{
    const ClosedFormRotator r = closed_form_rotator(RotatorParams{});
    CHECK(std::fabs(r.omega) == doctest::Approx(0.5));
    CHECK(r.omega0 == doctest::Approx(-std::sqrt(0.5)));
}

TEST_CASE("closed-form state satisfies the constraints")
{
    RotatorParams p;
    p.m0 = 1.3;
    p.a = 0.7;
    p.P0 = 3.5;
    p.phase = 0.4;
    const ClosedFormRotator r = closed_form_rotator(p);
    for (double t : {0.0, 0.3, 2.0, 11.0}) {
        const RotatorState s = r.state_at(t);
        for (double m : constraint_monitors(s, p)) CHECK(std::fabs(m) < 1e-12);
        const Vec4 z = rotator_zeta(s);
        CHECK(std::fabs(z[1]) + std::fabs(z[2]) + std::fabs(z[0]) < 1e-12);
        CHECK(z[3] == doctest::Approx(4.0 * p.a * p.a * p.m0 * r.omega * p.P0).epsilon(1e-12));
    }
    // endpoints stay a distance 2a apart and move at the same speed
    const Vec4 d = r.worldline1(1.3) - r.worldline2(1.3);
    CHECK(norm(d.spatial()) == doctest::Approx(2 * p.a));
}

TEST_CASE("sub-threshold energy is rejected")
{
    RotatorParams p;
    p.P0 = 1.5;
    try {
        closed_form_rotator(p);
        FAIL("expected sub-threshold error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SubThreshold);
    }
}

TEST_CASE("static pair at threshold")
{
    RotatorParams p;
    p.P0 = 2.0;
    const ClosedFormRotator r = closed_form_rotator(p);
    CHECK(r.omega == 0.0);
    const Vec4 a = r.worldline1(0.0), b = r.worldline1(5.0);
    CHECK(max_abs((b - a).spatial()) < 1e-15);
}

TEST_CASE("integration follows the closed form")
{
    const RotatorParams p;
    const ClosedFormRotator r = closed_form_rotator(p);
    const std::size_t steps = 2000;
    const double dt = r.period_tau() / 1000.0;
    const RotatorTrajectory tr = integrate_rotator(p, r.state_at(0.0), steps, dt);
    REQUIRE(tr.samples.size() == steps + 1);
    double dev = 0;
    for (const RotatorSample& s : tr.samples) dev = std::fmax(dev, max_abs(s.state.x - r.state_at(s.state.tau).x));
    CHECK(dev < 1e-8);
    CHECK(tr.max_monitor < 1e-10);
    CHECK(tr.zeta_drift < 1e-10);
}

TEST_CASE("integrator guards")
{
    const RotatorParams p;
    const ClosedFormRotator r = closed_form_rotator(p);
    try {
        integrate_rotator(p, r.state_at(0.0), 10, 1.0);
        FAIL("expected stability error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Stability);
    }
    RotatorState bad = r.state_at(0.0);
    bad.x[1] += 0.1;
    CHECK_THROWS_AS(integrate_rotator(p, bad, 10, 0.01), Error);
}

TEST_CASE("mass increase and rigidity")
{
    CHECK(mass_increase(0.0) == 0.0);
    CHECK(mass_increase(0.6) == doctest::Approx(0.25));
    CHECK(rigidity(0.0, 1.0, 1.0) == 0.0);
    CHECK(rigidity(0.15, 1.0, 1.0) == doctest::Approx(0.25));
    CHECK_THROWS_AS(rigidity(0.25, 1.0, 1.0), Error);
    CHECK_THROWS_AS(mass_increase(1.0), Error);
    for (double v : {0.1, 0.5, 0.9}) CHECK(rigidity(v / 4.0, 1.0, 1.0) == doctest::Approx(mass_increase(v)).epsilon(1e-13));
    const RigidityCurve c = rigidity_curve(1.0, 1.0, 1.0, 0.0, 0.24, 25);
    CHECK(c.a_bound == 0.25);
    REQUIRE(c.samples.size() == 25);
    for (std::size_t i = 1; i < c.samples.size(); ++i) CHECK(c.samples[i].second > c.samples[i - 1].second);
}

TEST_CASE("identification between the two models")
{
    const RrToDcr r = identify_rr_to_dcr(0.5, 1.0);
    CHECK(r.m == doctest::Approx(8.0 / 3.0));
    CHECK(r.m_dcr == doctest::Approx(2.0 / std::sqrt(0.75)));
    CHECK(r.omega_dcr == doctest::Approx(4.0));
    CHECK(r.a == doctest::Approx(0.125));
    CHECK(r.moment_ratio == doctest::Approx(0.25));

    for (double v : {0.05, 0.5, 0.95}) {
        const RrToDcr f = identify_rr_to_dcr(v, 1.7);
        const double zeta = 2.0 * v / (1.0 - v * v);
        const DcrToRr b = identify_dcr_to_rr(zeta, f.m);
        CHECK(b.m0 == doctest::Approx(1.7).epsilon(1e-12));
        CHECK(b.M == doctest::Approx(f.m_dcr).epsilon(1e-12));
    }
    CHECK_THROWS_AS(identify_dcr_to_rr(-1.0, 1.0), Error);
    CHECK_THROWS_AS(identify_rr_to_dcr(1.0, 1.0), Error);
}
