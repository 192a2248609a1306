#include "doctest.h"

#include <random>

#include "disquant/algebra.hpp"
#include "disquant/error.hpp"
#include "disquant/sampling.hpp"
#include "oracles.hpp"

using namespace disquant;

TEST_CASE("projector for z along the third axis has a single entry")
{
    const GammaBasis g = build_gamma_basis({0, 0, 1});
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(std::abs(g.pi_projector(r, c) - cplx(r == 0 && c == 0 ? 1.0 : 0.0)) < 1e-15);
}

TEST_CASE("projector trace and idempotence")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const GammaBasis g = build_gamma_basis(random_unit_vector(rng));
        CHECK(std::abs(g.pi_projector.trace() - 1.0) < 1e-14);
    }
    const GammaBasis g = build_gamma_basis({1, 0, 0});
    CHECK((g.pi_projector * g.pi_projector - g.pi_projector).max_abs() < 1e-14);
}

TEST_CASE("non-unit z is rejected")
{
    CHECK_THROWS_AS(build_gamma_basis({0, 0, 2}), Error);
    try {
        build_gamma_basis({1, 1, 0});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
}

TEST_CASE("Dirac basis blocks")
{
    const GammaBasis g = build_gamma_basis({0, 0, 1});
    // sigma_3 = diag(1,-1,1,-1), gamma5 couples upper and lower blocks with i
    CHECK(std::abs(g.sigma[2](0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(g.sigma[2](1, 1) + 1.0) < 1e-15);
    CHECK(std::abs(g.sigma[2](2, 2) - 1.0) < 1e-15);
    CHECK(std::abs(g.gamma5(0, 2) - cplx(0, 1)) < 1e-15);
    CHECK(std::abs(g.gamma5(2, 0) - cplx(0, 1)) < 1e-15);
}

TEST_CASE("rest-frame spinor")
{
    const GammaBasis g = build_gamma_basis({0, 0, 1});
    SpinorParams p;
    const Bilinears b = bilinears_matrix(spinor_from_params(p, g), g);
    CHECK(b.scalar == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.j[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (int a = 1; a < 4; ++a) CHECK(std::fabs(b.j[a]) < 1e-14);
    CHECK(std::fabs(b.S[0]) < 1e-14);
}

TEST_CASE("scalar bilinear is A^2 cos kappa")
{
    const GammaBasis g = build_gamma_basis({0, 0, 1});
    for (double k : {0.0, 0.4, 1.3, 2.9, -2.0}) {
        SpinorParams p;
        p.A = 2.0;
        p.kappa = k;
        const Bilinears b = bilinears_matrix(spinor_from_params(p, g), g);
        CHECK(b.scalar == doctest::Approx(4.0 * std::cos(k)).epsilon(1e-13));
    }
}

TEST_CASE("boost along x gives flux (cosh, sinh, 0, 0)")
{
    const GammaBasis g = build_gamma_basis({0, 0, 1});
    for (double eta : {0.3, 1.0, 2.5}) {
        SpinorParams p;
        p.eta = {eta, 0, 0};
        const Bilinears b = bilinears_matrix(spinor_from_params(p, g), g);
        CHECK(b.j[0] == doctest::Approx(std::cosh(eta)).epsilon(1e-13));
        CHECK(b.j[1] == doctest::Approx(std::sinh(eta)).epsilon(1e-13));
        CHECK(std::fabs(b.j[2]) < 1e-13);
        CHECK(std::fabs(b.j[3]) < 1e-13);
    }
}

TEST_CASE("spinor agrees with power-series exponentials")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        SpinorParams p = random_spinor_params(rng);
        p.A = 1.0;
        const GammaBasis g = build_gamma_basis(p.z);
        const Mat4 ref = oracle::spinor_matrix_series(p, g);
        const Mat4 got = spinor_operator(p, g) * g.pi_projector;
        CHECK((ref - got).max_abs() < 1e-10);
        // column form reproduces the matrix form: psi u^+ = M Pi
        const Spinor col = spinor_from_params(p, g);
        const Spinor u = projector_column(g);
        double d = 0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) d = std::fmax(d, std::abs(col[r] * std::conj(u[c]) - got(r, c)));
        CHECK(d < 1e-12);
    }
}

TEST_CASE("proper representation: only the first column is populated")
{
    std::mt19937_64 rng(12);
    const GammaBasis g = build_gamma_basis({0, 0, 1});
    for (int t = 0; t < 20; ++t) {
        SpinorParams p = random_spinor_params(rng);
        p.z = {0, 0, 1};
        const Mat4 m = spinor_operator(p, g) * g.pi_projector;
        for (int r = 0; r < 4; ++r)
            for (int c = 1; c < 4; ++c) CHECK(std::abs(m(r, c)) < 1e-14);
    }
}

TEST_CASE("closed-form bilinears: limits and boosted spin")
{
    SpinorParams p;
    p.n = {1, 0, 0};
    const Bilinears b = bilinears_closed_form(p);
    const Vec3 xi = p.xi();
    CHECK(b.j[0] == 1.0);
    CHECK(b.S[0] == 0.0);
    for (int a = 0; a < 3; ++a) CHECK(b.S[a + 1] == doctest::Approx(xi[a]));

    SpinorParams q;
    q.eta = {0, 0, 2};
    const Bilinears c = bilinears_closed_form(q);
    CHECK(c.S[0] == doctest::Approx(std::sinh(2.0)).epsilon(1e-14));
    CHECK(c.S[3] == doctest::Approx(std::cosh(2.0)).epsilon(1e-14));
}

TEST_CASE("closed form matches matrix route for seeded parameters")
{
    std::mt19937_64 rng(42);
    for (int t = 0; t < 1000; ++t) {
        const SpinorParams p = random_spinor_params(rng);
        const GammaBasis g = build_gamma_basis(p.z);
        const Bilinears bm = bilinears_matrix(spinor_from_params(p, g), g);
        const Bilinears bc = bilinears_closed_form(p);
        const double s = bc.j[0];
        for (int l = 0; l < 4; ++l) {
            REQUIRE(std::fabs(bm.j[l] - bc.j[l]) / s < 1e-10);
            REQUIRE(std::fabs(bm.S[l] - bc.S[l]) / s < 1e-10);
        }
        const double A4 = std::pow(p.A, 4);
        REQUIRE(std::fabs(mdot(bm.S, bm.S) + mdot(bm.j, bm.j)) < 1e-10 * A4);
        REQUIRE(std::fabs(mdot(bm.j, bm.S)) < 1e-10 * A4);
        REQUIRE(std::fabs(bm.rho - p.A * p.A) < 1e-12 * p.A * p.A);
        REQUIRE(bm.j[0] >= bm.rho);
    }
}

TEST_CASE("xi from bilinears")
{
    Bilinears b;
    b.j = {1, 0, 0, 0};
    b.S = {0, 0, 0, 1};
    const Vec3 xi = xi_from_bilinears(b);
    CHECK(max_abs(xi - Vec3(0, 0, 1)) < 1e-15);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        const SpinorParams p = random_spinor_params(rng);
        const Bilinears c = bilinears_closed_form(p);
        CHECK(max_abs(xi_from_bilinears(c) - p.xi()) < 1e-10);
        Bilinears rt = c;
        rt.S = spin_from_xi(c.j, p.xi());
        CHECK(max_abs(rt.S - c.S) < 1e-10 * c.j[0]);
        CHECK(max_abs(xi_from_bilinears(rt) - p.xi()) < 1e-12);
    }
    Bilinears bad;
    bad.j = {1, 1, 0, 0};
    CHECK_THROWS_AS(xi_from_bilinears(bad), Error);
}

TEST_CASE("n from xi inversion and antipodal guard")
{
    std::mt19937_64 rng(6);
    for (int t = 0; t < 500; ++t) {
        const Vec3 xi = random_unit_vector(rng), z = random_unit_vector(rng);
        if (1.0 + dot(xi, z) < 1e-6) continue;
        const Vec3 n = n_from_xi(xi, z);
        CHECK(std::fabs(norm(n) - 1.0) < 1e-12);
        CHECK(max_abs(xi_from_n(n, z) - xi) < 1e-10);
    }
    try {
        n_from_xi({0, 0, -1}, {0, 0, 1});
        FAIL("expected antipodal error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Antipodal);
    }
}
