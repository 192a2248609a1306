#include "doctest.h"

#include <random>

#include "disquant/covariant.hpp"
#include "disquant/error.hpp"
#include "disquant/sampling.hpp"
#include "oracles.hpp"

using namespace disquant;

namespace {

// F1..F3 from finite differences of the closed-form bilinears along the field.
struct FdPieces {
    double F1, F2, F3;
};

FdPieces fd_pieces(const ParamField& f, const Vec4& x, double hbar)
{
    const SpinorParams p = f.at(x);
    const Bilinears b = bilinears_closed_form(p);
    const Vec3 xi = p.xi();
    FdPieces r{0, 0, 0};
    for (int l = 0; l < 4; ++l) {
        auto along = [&](double s) {
            Vec4 y = x;
            y[l] += s;
            return f.at(y);
        };
        const double h = 1e-4;
        const double dphi = oracle::diff5([&](double s) { return along(s).phi; }, 0.0, h);
        const double dkap = oracle::diff5([&](double s) { return along(s).kappa; }, 0.0, h);
        Vec3 dxi;
        for (int a = 0; a < 3; ++a) dxi[a] = oracle::diff5([&](double s) { return along(s).xi()[a]; }, 0.0, h);
        r.F1 += -hbar * b.j[l] * dphi;
        r.F2 += -0.5 * hbar * b.S[l] * dkap;
        r.F3 += -hbar * b.j[l] * dot(cross(xi, dxi), p.z) / (2.0 * (1.0 + dot(xi, p.z)));
    }
    return r;
}

} // namespace

TEST_CASE("derivative split in the rest frame")
{
    const auto [par, tr] = split_derivative({1, 0, 0, 0}, {3, 1, 2, 0});
    CHECK(max_abs(par - Vec4(3, 0, 0, 0)) == 0.0);
    CHECK(max_abs(tr - Vec4(0, 1, 2, 0)) == 0.0);
    const auto [p2, t2] = split_derivative({2, 1, 0, 0}, {4, 2, 0, 0});
    CHECK(max_abs(t2) < 1e-15);
    CHECK_THROWS_AS(split_derivative({1, 1, 0, 0}, {1, 0, 0, 0}), Error);
}

TEST_CASE("derivative split properties for random timelike flux")
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd(0, 1);
    for (int t = 0; t < 1000; ++t) {
        const Vec3 s(nd(rng), nd(rng), nd(rng));
        const Vec4 j(std::sqrt(1.0 + dot(s, s)) * (1.0 + std::fabs(nd(rng))), s);
        const Vec4 g(nd(rng), nd(rng), nd(rng), nd(rng));
        const auto [par, tr] = split_derivative(j, g);
        CHECK(max_abs(par + tr - g) < 1e-12 * max_abs(g));
        CHECK(std::fabs(mdot(j, tr)) < 1e-12 * max_abs(g) * j[0]);
    }
}

TEST_CASE("quasi-uniformity parameter")
{
    CHECK(quasi_uniformity({1, 0, 0, 0}, {0, 0.7, 0, 0}, 1.0, 1.0, 1.0) == doctest::Approx(0.7));
    CHECK(quasi_uniformity({2, 1, 0, 0}, {4, 2, 0, 0}, 1.0, 1.0, 1.0) == doctest::Approx(0.0));
    const double q1 = quasi_uniformity({1.5, 0.3, -0.2, 0.1}, {0.2, 0.4, 0.1, -0.3}, 1.0, 1.0, 1.0);
    const double q2 = quasi_uniformity({1.5, 0.3, -0.2, 0.1}, {0.2, 0.4, 0.1, -0.3}, 2.0, 1.0, 1.0);
    CHECK(q2 == doctest::Approx(0.5 * q1));
    CHECK_THROWS_AS(quasi_uniformity({1, 0, 0, 0}, {0, 1, 0, 0}, 0.0, 1.0, 1.0), Error);
}

TEST_CASE("constant field has no kinetic pieces")
{
    SpinorParams sp;
    sp.A = 1.3;
    sp.kappa = 0.8;
    sp.eta = {0.4, -0.2, 0.1};
    sp.n = normalized(Vec3(0.3, 0.1, 1.0));
    const ParamField f = ParamField::constant(sp);
    const Vec4 x(0.1, 0.2, -0.1, 0.3);
    const LagrangianPieces L = lagrangian_pieces(f, x, 2.0, 1.0);
    const double rho = sp.A * sp.A;
    CHECK(L.F1 == 0.0);
    CHECK(L.F2 == 0.0);
    CHECK(L.F3 == 0.0);
    CHECK(std::fabs(L.F4) < 1e-15);
    CHECK(L.L_cl == doctest::Approx(-2.0 * rho));
    CHECK(L.L_q1 == doctest::Approx(4.0 * rho * std::pow(std::sin(0.4), 2)));
    CHECK(std::fabs(L.L_q2) < 1e-15);
    const GammaBasis g = build_gamma_basis(sp.z);
    CHECK(std::fabs(kinetic_term_matrix(f, x, g, 1.0, 1e-4)) < 1e-12);
}

TEST_CASE("constant field at zero rapidity")
{
    SpinorParams sp;
    const ParamField f = ParamField::constant(sp);
    const LagrangianPieces L = lagrangian_pieces(f, Vec4(), 1.0, 1.0);
    CHECK(L.F4 == 0.0);
    CHECK(L.L_cl == doctest::Approx(-1.0));
}

TEST_CASE("analytic chain rule matches finite differences of the bilinears")
{
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto [f, x] = random_field_point(900 + s);
        const LagrangianPieces L = lagrangian_pieces(f, x, 1.0, 0.7);
        const FdPieces r = fd_pieces(f, x, 0.7);
        CHECK(oracle::ulp_rel(L.F1, r.F1) < 1e-8);
        CHECK(oracle::ulp_rel(L.F2, r.F2) < 1e-8);
        CHECK(oracle::ulp_rel(L.F3, r.F3) < 1e-8);
    }
}

TEST_CASE("dual forms of F3 and F4 at random points")
{
    for (std::uint64_t s = 0; s < 500; ++s) {
        auto [f, x] = random_field_point(s);
        const LagrangianPieces L = lagrangian_pieces(f, x, 1.0, 1.0);
        REQUIRE(oracle::ulp_rel(L.F3, L.F3_cov) < 1e-10);
        REQUIRE(oracle::ulp_rel(L.F3_cov, L.F3_cov_out) < 1e-10);
        REQUIRE(oracle::ulp_rel(L.F4, L.F4_cov) < 1e-10);
        REQUIRE(oracle::ulp_rel(L.F4, L.F4_q) < 1e-10);
        REQUIRE(std::fabs(mdot(L.aux.nu, L.aux.nu) + 1.0) < 1e-10);
        REQUIRE(std::fabs(mdot(L.aux.q, L.aux.q) - 1.0) < 1e-10);
        REQUIRE(mdot(L.aux.f, L.aux.f) == 1.0);
    }
}

TEST_CASE("field derivatives keep n tangent")
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto [f, x] = random_field_point(300 + s);
        const ParamJet jt = f.jet(x);
        CHECK(std::fabs(norm(jt.p.n) - 1.0) < 1e-14);
        for (int l = 0; l < 4; ++l) CHECK(std::fabs(dot(jt.p.n, jt.dn[l])) < 1e-14);
        // derivatives agree with finite differences of the field itself
        for (int l = 0; l < 4; ++l) {
            auto A = [&](double h) {
                Vec4 y = x;
                y[l] += h;
                return f.at(y).A;
            };
            CHECK(oracle::ulp_rel(oracle::diff5(A, 0.0, 1e-3), jt.dA[l]) < 1e-9);
        }
    }
}

TEST_CASE("linear phase reduces the kinetic term to -hbar j.k")
{
    SpinorParams sp;
    sp.eta = {0.5, 0.2, -0.3};
    sp.n = normalized(Vec3(1, 2, 2));
    ParamField f = ParamField::constant(sp);
    f.p = Vec4(0.7, -0.4, 0.2, 1.1);
    const GammaBasis g = build_gamma_basis(sp.z);
    const Vec4 x(0.2, 0.1, -0.3, 0.4);
    const Bilinears b = bilinears_closed_form(sp);
    double jk = 0;
    for (int l = 0; l < 4; ++l) jk += b.j[l] * f.p[l];
    CHECK(kinetic_term_matrix(f, x, g, 1.0, 1e-4) == doctest::Approx(-jk).epsilon(1e-7));
    const LagrangianPieces L = lagrangian_pieces(f, x, 1.0, 1.0);
    CHECK(L.F1 == doctest::Approx(-jk).epsilon(1e-13));
}

TEST_CASE("kinetic term converges at second order")
{
    double e[3] = {0, 0, 0};
    const double hs[3] = {1e-3, 5e-4, 2.5e-4};
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto [f, x] = random_field_point(5000 + s);
        const GammaBasis g = build_gamma_basis(f.z);
        const double F = lagrangian_pieces(f, x, 1.0, 1.0).kinetic();
        for (int k = 0; k < 3; ++k) e[k] += std::fabs(kinetic_term_matrix(f, x, g, 1.0, hs[k]) - F);
    }
    CHECK(std::log2(e[0] / e[1]) > 1.9);
    CHECK(std::log2(e[1] / e[2]) > 1.9);
}

TEST_CASE("finite-difference step is range checked")
{
    auto [f, x] = random_field_point(1);
    const GammaBasis g = build_gamma_basis(f.z);
    CHECK_THROWS_AS(kinetic_term_matrix(f, x, g, 1.0, 1e-2), Error);
    CHECK_THROWS_AS(kinetic_term_matrix(f, x, g, 1.0, 1e-8), Error);
}

TEST_CASE("antipodal spin direction is rejected")
{
    SpinorParams sp;
    sp.n = {1, 0, 0};  // xi = -z
    const ParamField f = ParamField::constant(sp);
    try {
        lagrangian_pieces(f, Vec4(), 1.0, 1.0);
        FAIL("expected antipodal error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Antipodal);
    }
}

TEST_CASE("effective mass branches")
{
    CHECK(effective_mass_branch(0.0).stationary);
    CHECK(effective_mass_branch(0.0).cos_kappa == 1.0);
    CHECK(effective_mass_branch(M_PI).stationary);
    CHECK(effective_mass_branch(M_PI).cos_kappa == -1.0);
    CHECK(effective_mass_branch(4.0 * M_PI).cos_kappa == 1.0);
    CHECK_FALSE(effective_mass_branch(0.3).stationary);
    CHECK(effective_mass_branch(0.3).cos_kappa == doctest::Approx(std::cos(0.3)));
    CHECK(effective_mass_branch(stable_kappa()).cos_kappa == 1.0);
}
