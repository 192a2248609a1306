#include "disquant/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "disquant/algebra.hpp"
#include "disquant/covariant.hpp"
#include "disquant/particle.hpp"
#include "disquant/rotator.hpp"
#include "disquant/sampling.hpp"

namespace disquant {

namespace {

class Suite {
public:
    Suite(std::string name, const VerifyConfig& cfg, VerificationReport& rep) : name_(std::move(name)), cfg_(cfg), rep_(rep) {}

    void check(const std::string& id, const std::string& ref, double residual, double tol)
    {
        CheckRecord r;
        r.suite = name_;
        r.id = id;
        r.reference = ref;
        r.residual = residual;
        r.tolerance = tol * cfg_.tol_scale;
        r.pass = std::isfinite(residual) && residual <= r.tolerance;
        r.seed = cfg_.seed;
        rep_.records.push_back(r);
    }

    const VerifyConfig& cfg() const { return cfg_; }

private:
    std::string name_;
    const VerifyConfig& cfg_;
    VerificationReport& rep_;
};

double rel(double a, double b) { return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1.0}); }
double relv(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

template <class T, class F>
double max_of(const std::vector<T>& v, F f)
{
    double m = 0;
    for (const auto& x : v) m = std::max(m, f(x));
    return m;
}

std::string bstr(double b)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", b);
    return buf;
}

// ---------------------------------------------------------------- algebra

void suite_algebra(Suite& s)
{
    const auto& cfg = s.cfg();
    std::mt19937_64 rng(point_seed(cfg.seed, 1, 0));
    const Mat4 one = Mat4::identity();

    double anti = 0, g5 = 0, g5s = 0, g0a = 0, herm = 0, prod = 0, pauli = 0, proj = 0;
    for (int t = 0; t < 100; ++t) {
        const Vec3 z = random_unit_vector(rng);
        const GammaBasis g = build_gamma_basis(z);
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
                Mat4 r = g.gamma[k] * g.gamma[l] + g.gamma[l] * g.gamma[k];
                if (k == l) r = r - cplx(2.0 * metric[k]) * one;
                anti = std::max(anti, r.max_abs());
            }
        g5 = std::max(g5, (g.gamma5 * g.gamma5 + one).max_abs());
        herm = std::max(herm, (g.gamma[0].adjoint() - g.gamma[0]).max_abs());
        prod = std::max(prod, (g.gamma5 + g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3]).max_abs());
        herm = std::max(herm, (g.gamma[0] * g.gamma5 + g.gamma5 * g.gamma[0]).max_abs());
        for (int a = 0; a < 3; ++a) {
            g5s = std::max(g5s, (g.gamma5 * g.sigma[a] - g.sigma[a] * g.gamma5).max_abs());
            g0a = std::max(g0a, (g.gamma[0] * g.gamma[a + 1] + cplx(0, 1) * (g.gamma5 * g.sigma[a])).max_abs());
            herm = std::max(herm, (g.gamma[a + 1].adjoint() + g.gamma[a + 1]).max_abs());
            herm = std::max(herm, (g.gamma[0] * g.sigma[a] - g.sigma[a] * g.gamma[0]).max_abs());
            const int b = (a + 1) % 3, c = (a + 2) % 3;
            prod = std::max(prod, (g.sigma[a] - cplx(0, 1) * (g.gamma[b + 1] * g.gamma[c + 1])).max_abs());
            for (int bb = 0; bb < 3; ++bb) {
                Mat4 r = g.sigma[a] * g.sigma[bb];
                if (a == bb) r = r - one;
                for (int cc = 0; cc < 3; ++cc) {
                    const int e = (a == bb || bb == cc || a == cc) ? 0 : (((bb - a + 3) % 3 == 1) ? 1 : -1);
                    if (e) r = r - cplx(0, e) * g.sigma[cc];
                }
                pauli = std::max(pauli, r.max_abs());
            }
        }
        const Mat4& P = g.pi_projector;
        proj = std::max({proj, (P * P - P).max_abs(), (g.gamma[0] * P - P).max_abs(),
                         (g.sigma_dot(z) * P - P).max_abs(), (P * g.gamma5 * P).max_abs(),
                         std::abs(P.trace() - 1.0)});
        for (int a = 0; a < 3; ++a) proj = std::max(proj, (P * g.sigma[a] * P - cplx(z[a]) * P).max_abs());
    }
    s.check("anticommutator", "Clifford anticommutation relation", anti, 1e-12);
    s.check("gamma5_square", "gamma5 squares to -1", g5, 1e-12);
    s.check("gamma5_sigma_commute", "gamma5 commutes with sigma", g5s, 1e-12);
    s.check("gamma0_gamma_alpha", "gamma0 gamma^a = -i gamma5 sigma_a", g0a, 1e-12);
    s.check("conjugation", "hermiticity of gamma0 and antihermiticity of gamma^a", herm, 1e-12);
    s.check("product_convention", "gamma5 = -g0g1g2g3 and sigma_a = i g^b g^c", prod, 1e-12);
    s.check("pauli_algebra", "sigma_a sigma_b = delta_ab + i eps_abc sigma_c", pauli, 1e-12);
    s.check("projector_relations", "zero divisor projector identities", proj, 1e-12);

    struct Row {
        double equiv, ident, dens, xi, round, inv, unit;
    };
    auto rows = parallel_map(1000, cfg.threads, [&](std::size_t i) {
        std::mt19937_64 r(point_seed(cfg.seed, 2, i));
        const SpinorParams p = random_spinor_params(r);
        const GammaBasis g = build_gamma_basis(p.z);
        const Bilinears bm = bilinears_matrix(spinor_from_params(p, g), g);
        const Bilinears bc = bilinears_closed_form(p);
        const double scale = bc.j[0];
        Row row{};
        row.equiv = std::fabs(bm.scalar - bc.scalar) / scale;
        for (int l = 0; l < 4; ++l)
            row.equiv = std::max({row.equiv, std::fabs(bm.j[l] - bc.j[l]) / scale, std::fabs(bm.S[l] - bc.S[l]) / scale});
        const double A4 = std::pow(p.A, 4);
        for (const Bilinears* b : {&bm, &bc})
            row.ident = std::max({row.ident, std::fabs(mdot(b->S, b->S) + mdot(b->j, b->j)) / A4,
                                  std::fabs(mdot(b->j, b->S)) / A4});
        row.dens = std::fabs(bm.rho - p.A * p.A) / (p.A * p.A);
        const Vec3 xi = xi_from_bilinears(bm);
        row.xi = max_abs(xi - p.xi());
        row.unit = std::fabs(norm(xi) - 1.0);
        Bilinears rt = bc;
        rt.S = spin_from_xi(bc.j, p.xi());
        row.round = max_abs(xi_from_bilinears(rt) - p.xi());
        row.inv = 0;
        if (1.0 + dot(p.xi(), p.z) > 1e-6) row.inv = max_abs(xi_from_n(n_from_xi(p.xi(), p.z), p.z) - p.xi());
        return row;
    });
    s.check("bilinear_equivalence", "matrix vs closed-form bilinears", max_of(rows, [](const Row& r) { return r.equiv; }), 1e-10);
    s.check("bilinear_identities", "S.S = -j.j and j.S = 0", max_of(rows, [](const Row& r) { return r.ident; }), 1e-10);
    s.check("density", "rho = A^2", max_of(rows, [](const Row& r) { return r.dens; }), 1e-12);
    s.check("xi_from_bilinears", "xi from flux and spin equals 2n(n.z)-z", max_of(rows, [](const Row& r) { return r.xi; }), 1e-10);
    s.check("xi_unit", "xi is a unit vector", max_of(rows, [](const Row& r) { return r.unit; }), 1e-10);
    s.check("xi_spin_round_trip", "xi to spin pseudovector and back", max_of(rows, [](const Row& r) { return r.round; }), 1e-12);
    s.check("n_from_xi_inversion", "n = (xi+z)/sqrt(2(1+xi.z)) recovers xi", max_of(rows, [](const Row& r) { return r.inv; }), 1e-12);
}

// ---------------------------------------------------------------- appendix A

void suite_appendix_a(Suite& s)
{
    const auto& cfg = s.cfg();
    const double hs[4] = {1e-3, 5e-4, 2.5e-4, 1e-4};
    struct Row {
        double err[4];
        double structure;
        double decomposition;
    };
    auto rows = parallel_map(100, cfg.threads, [&](std::size_t i) {
        auto [field, x] = random_field_point(point_seed(cfg.seed, 3, i));
        const GammaBasis g = build_gamma_basis(field.z);
        const LagrangianPieces L = lagrangian_pieces(field, x, cfg.m, cfg.hbar);
        Row r{};
        for (int k = 0; k < 4; ++k) {
            const KineticTerm kt = kinetic_term_full(field, x, g, cfg.hbar, hs[k]);
            r.err[k] = std::fabs(kt.value - L.kinetic());
            r.structure = std::max({r.structure, std::fabs(kt.imag), kt.off_pi});
        }
        const double full = -cfg.m * L.bil.rho * std::cos(field.at(x).kappa) + L.kinetic();
        r.decomposition = rel(L.L_cl + L.L_q1 + L.L_q2, full);
        return r;
    });
    double sum[4] = {0, 0, 0, 0};
    for (const auto& r : rows)
        for (int k = 0; k < 4; ++k) sum[k] += r.err[k];
    const double order = std::min(std::log2(sum[0] / sum[1]), std::log2(sum[1] / sum[2]));
    s.check("kinetic_term_h1e-4", "finite-difference kinetic term equals F1+F2+F3+F4",
            max_of(rows, [](const Row& r) { return r.err[3]; }), 1e-6);
    s.check("kinetic_convergence_order", "deviation of observed order from 2 (halving h)", std::fabs(2.0 - order), 0.1);
    s.check("kinetic_projector_structure", "kinetic product is a real multiple of the projector",
            max_of(rows, [](const Row& r) { return r.structure; }), 1e-10);
    s.check("lagrangian_decomposition", "L_cl + L_q1 + L_q2 = Dirac Lagrangian",
            max_of(rows, [](const Row& r) { return r.decomposition; }), 1e-10);

    // linear phase only: kinetic term reduces to -hbar j.k
    std::mt19937_64 rng(point_seed(cfg.seed, 4, 0));
    double lin = 0;
    for (int t = 0; t < 20; ++t) {
        SpinorParams sp = random_spinor_params(rng);
        ParamField f = ParamField::constant(sp);
        std::normal_distribution<double> nd(0.0, 1.0);
        f.p = Vec4(nd(rng), nd(rng), nd(rng), nd(rng));
        const Vec4 x(0.1, -0.2, 0.3, 0.05);
        const GammaBasis g = build_gamma_basis(sp.z);
        const Bilinears b = bilinears_closed_form(f.at(x));
        double jk = 0;
        for (int l = 0; l < 4; ++l) jk += b.j[l] * f.p[l];
        lin = std::max(lin, rel(kinetic_term_matrix(f, x, g, cfg.hbar, 1e-4), -cfg.hbar * jk));
    }
    s.check("linear_phase_kinetic", "linear phase gives -hbar j.k", lin, 1e-6);
}

// ---------------------------------------------------------------- appendix B

void suite_appendix_b(Suite& s)
{
    const auto& cfg = s.cfg();
    struct Row {
        double f4c, f4q, f3, f3o, aux, split;
    };
    auto rows = parallel_map(500, cfg.threads, [&](std::size_t i) {
        auto [field, x] = random_field_point(point_seed(cfg.seed, 5, i));
        const LagrangianPieces L = lagrangian_pieces(field, x, cfg.m, cfg.hbar);
        Row r{};
        r.f4c = rel(L.F4, L.F4_cov);
        r.f4q = rel(L.F4, L.F4_q);
        r.f3 = rel(L.F3, L.F3_cov);
        r.f3o = rel(L.F3_cov, L.F3_cov_out);
        r.aux = std::max(std::fabs(mdot(L.aux.nu, L.aux.nu) + 1.0), std::fabs(mdot(L.aux.q, L.aux.q) - 1.0));
        std::mt19937_64 rng(point_seed(cfg.seed, 6, i));
        std::normal_distribution<double> nd(0.0, 1.0);
        const Vec4 grad(nd(rng), nd(rng), nd(rng), nd(rng));
        const auto [par, tr] = split_derivative(L.bil.j, grad);
        const double gs = max_abs(grad);
        r.split = std::max(max_abs(par + tr - grad) / gs, std::fabs(mdot(L.bil.j, tr)) / (gs * L.bil.j[0]));
        return r;
    });
    s.check("F4_three_vs_flux_form", "three-dimensional F4 equals covariant flux form",
            max_of(rows, [](const Row& r) { return r.f4c; }), 1e-10);
    s.check("F4_three_vs_unit_form", "three-dimensional F4 equals unit-vector q form",
            max_of(rows, [](const Row& r) { return r.f4q; }), 1e-10);
    s.check("F3_three_vs_covariant", "three-dimensional F3 equals covariant mu form",
            max_of(rows, [](const Row& r) { return r.f3; }), 1e-10);
    s.check("F3_normalization_placement", "F3 normalization inside vs outside the derivative",
            max_of(rows, [](const Row& r) { return r.f3o; }), 1e-10);
    s.check("aux_normalization", "nu.nu = -1 and q.q = 1", max_of(rows, [](const Row& r) { return r.aux; }), 1e-10);
    s.check("derivative_split", "longitudinal plus transversal derivative, j.d_perp = 0",
            max_of(rows, [](const Row& r) { return r.split; }), 1e-12);
}

// ---------------------------------------------------------------- appendix C

void suite_appendix_c(Suite& s)
{
    const auto& cfg = s.cfg();
    struct Row {
        double r65, r71, lin;
    };
    auto rows = parallel_map(100, cfg.threads, [&](std::size_t i) {
        std::mt19937_64 rng(point_seed(cfg.seed, 7, i));
        std::normal_distribution<double> nd(0.0, 0.7);
        const Vec3 v(nd(rng), nd(rng), nd(rng)), acc(nd(rng), nd(rng), nd(rng));
        const Vec4 xdot(std::sqrt(1.0 + dot(v, v)), v);
        const Vec4 xddot(dot(v, acc) / xdot[0], acc);
        const Vec3 xi = random_unit_vector(rng);
        Vec3 z;
        do {
            z = random_unit_vector(rng);
        } while (1.0 + dot(xi, z) < 1e-3);
        const double Q = q_function(xdot, Vec4(1, 0, 0, 0));
        const Vec3 xidot = -Q * cross(cross(v, acc), xi);
        const auto [r65, r71] = xi_equation_check(xi, xidot, xdot, xddot, z);
        // perturb along a direction tangent to the sphere
        const Vec3 d = normalized(cross(xi, random_unit_vector(rng)));
        const double e1 = xi_equation_check(xi, xidot + 1e-4 * d, xdot, xddot, z).first;
        const double e2 = xi_equation_check(xi, xidot + 2e-4 * d, xdot, xddot, z).first;
        Row r{r65, r71, std::fabs(e2 / e1 - 2.0)};
        return r;
    });
    s.check("xi_equation_reduction", "reduced spin equation solves the full xi equation for random z",
            max_of(rows, [](const Row& r) { return r.r65; }), 1e-10);
    s.check("xi_equation_reduced_form", "reduced spin equation residual", max_of(rows, [](const Row& r) { return r.r71; }), 1e-12);
    s.check("xi_equation_sensitivity", "xi-equation residual is linear in a perturbation of xidot",
            max_of(rows, [](const Row& r) { return r.lin; }), 1e-6);
}

// ---------------------------------------------------------------- particle

double xi_constancy_drift(const HelixSolution& h)
{
    // integrate xidot = -(y x ydot) x xi along the closed-form helix
    const int n = 2000;
    const double T = h.period_tau(), dt = T / n;
    const double sb2 = std::sqrt(h.b + 2.0);
    auto rhs = [&](double tau, const Vec3& xi) {
        const WorldlineState w = h.state_at(tau);
        const Vec3 ydot = w.xddot.spatial() / sb2;
        return -cross(cross(w.y, ydot), xi);
    };
    Vec3 xi = h.xi();
    const Vec3 xi0 = xi;
    double drift = 0;
    for (int k = 0; k < n; ++k) {
        const double t = k * dt;
        const Vec3 k1 = rhs(t, xi), k2 = rhs(t + 0.5 * dt, xi + 0.5 * dt * k1);
        const Vec3 k3 = rhs(t + 0.5 * dt, xi + 0.5 * dt * k2), k4 = rhs(t + dt, xi + dt * k3);
        xi = xi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        drift = std::max(drift, max_abs(xi - xi0));
    }
    return drift;
}

void suite_particle(Suite& s)
{
    const auto& cfg = s.cfg();
    DcParams p;
    p.m = cfg.m;
    p.hbar = cfg.hbar;
    p.c = cfg.c;
    const double lam = p.lambda();
    for (double b : {0.1, 1.0, 10.0}) {
        const std::string tag = "_b" + bstr(b);
        const HelixSolution h = helix_solution(b, 0.0, p);
        const double T = h.period_tau();
        const double sb2 = std::sqrt(b + 2.0);
        const Vec4 P0 = momentum(h.state_at(0.0), Vec3(), p);
        double red = 0, spin = 0, drift = 0, cons = 0, lag = 0, radius = 0;
        for (int k = 0; k <= 400; ++k) {
            const double tau = T * k / 400.0;
            const WorldlineState w = h.state_at(tau);
            const Vec3 ydot = w.xddot.spatial() / sb2;
            const ReducedResidual r = reduced_system_residual(w.y, ydot, w.xi, w.xidot, w.xdot[0], h.w0, lam);
            red = std::max({red, r.transverse, r.longitudinal, r.gauge});
            spin = std::max(spin, r.spin);
            drift = std::max(drift, max_abs(momentum(w, w.xidot, p) - P0) / max_abs(P0));
            cons = std::max({cons, std::fabs(dot(w.y, ydot)), std::fabs(dot(w.y, w.xi)), std::fabs(dot(w.y, w.y) - b),
                             std::fabs(mdot(w.xdot, w.xdot) - 1.0), max_abs(y_from_velocity(w.xdot) - w.y)});
            lag = std::max(lag, rel(lagrangian_dc(w, p), lagrangian_dc_covariant(w, p)));
            const Vec4 xt = h.position_at_time(tau * (b + 1.0) / p.c);
            radius = std::max(radius, std::fabs(std::hypot(xt[1], xt[2]) - h.a_dcr) / h.a_dcr);
        }
        const Vec4 Pexp(-p.m / (b + 1.0), 0, 0, 0);
        s.check("helix_reduced_system" + tag, "closed-form helix satisfies the reduced first-order system", red, 1e-9);
        s.check("helix_spin_equation" + tag, "spin direction equation on the helix", spin, 1e-9);
        s.check("helix_momentum_drift" + tag, "canonical momentum conserved over one period", drift, 1e-8);
        s.check("helix_momentum_value" + tag, "P = (m w0, 0, 0, 0)", max_abs(P0 - Pexp) / max_abs(Pexp), 1e-8);
        s.check("helix_rest_mass" + tag, "relativized mass equals m/(b+1)", relv(relativize(P0).M, h.m_dcr), 1e-10);
        s.check("helix_w0_relation" + tag, "w0 (b+1) = -1", std::fabs(h.w0 * (b + 1.0) + 1.0), 1e-12);
        s.check("helix_Omega" + tag, "|Omega| = 2c/(lambda (b+1)^2)",
                relv(std::fabs(h.Omega), 2.0 * p.c / (lam * (b + 1.0) * (b + 1.0))), 1e-12);
        s.check("helix_constraints" + tag, "y.ydot = 0, y.xi = 0, y^2 = b, proper-time gauge", cons, 1e-10);
        s.check("helix_lagrangian_dual_form" + tag, "three-dimensional vs covariant worldline Lagrangian", lag, 1e-12);
        s.check("helix_xi_constancy" + tag, "integrated spin direction stays constant", xi_constancy_drift(h), 1e-9);
        s.check("helix_radius" + tag, "sampled trajectory stays on the circle of radius a_dcr", radius, 1e-10);

        // boosted helix: momentum transforms as a covector
        const Vec3 beta(0.3, -0.2, 0.4);
        const WorldlineState w = h.state_at(0.37 * T);
        const Vec4 nu(0.0, w.xi), f(1, 0, 0, 0);
        const Vec4 Pb = momentum_covariant(lorentz_boost(w.xdot, beta), lorentz_boost(w.xddot, beta),
                                           lorentz_boost(nu, beta), Vec4(), lorentz_boost(f, beta), p.m, p.hbar);
        const Vec4 Pexpb = flip(lorentz_boost(flip(momentum(w, w.xidot, p)), beta));
        s.check("helix_boost_covariance" + tag, "boosted helix momentum equals boosted momentum",
                max_abs(Pb - Pexpb) / max_abs(Pexpb), 1e-10);
    }

    std::vector<double> bs{0.0};
    for (int k = 0; k <= 200; ++k) bs.push_back(std::pow(10.0, -6.0 + 8.0 * k / 200.0));
    double forms = 0, chain = 0, binv = 0;
    for (double b : bs) {
        const Observables ob = observables(b, p);
        const Observables oz = observables_from_zeta(ob.zeta, p);
        const double cb = std::cosh(ob.beta);
        forms = std::max({forms, relv(oz.m_dcr, ob.m_dcr), relv(p.m / cb, ob.m_dcr), rel(oz.v, ob.v),
                          rel(p.c * std::tanh(ob.beta), ob.v), relv(oz.omega_dcr, ob.omega_dcr),
                          relv(2.0 * p.m * p.c * p.c / (p.hbar * cb * cb), ob.omega_dcr), rel(oz.a_dcr, ob.a_dcr),
                          rel(std::sinh(2.0 * ob.beta), ob.zeta)});
        chain = std::max(chain, std::fabs(w0_relation_residual(b, -1.0 / (b + 1.0))));
        binv = std::max(binv, std::fabs(b_from_zeta(ob.zeta) - b) / (1.0 + b));
    }
    s.check("observables_dual_forms", "b-form vs zeta/beta-form observables over b in [0,100]", forms, 1e-12);
    s.check("w0_relation_chain", "w0 = -1/(b+1) zeroes the transversal relation", chain, 1e-12);
    s.check("b_from_zeta_round_trip", "b recovered from the helix radius parameter", binv, 1e-12);
}

// ---------------------------------------------------------------- rotator

void suite_rotator(Suite& s)
{
    const auto& cfg = s.cfg();
    RotatorParams rp;
    rp.m0 = cfg.m0;
    rp.a = 1.0;
    rp.P0 = 2.0 * std::sqrt(2.0) * cfg.m0;
    rp.c = cfg.c;
    rp.hbar = cfg.hbar;
    const ClosedFormRotator cf = closed_form_rotator(rp);
    const std::size_t N = 2000;
    const RotatorTrajectory tr = integrate_rotator(rp, cf.state_at(0.0), N, cf.period_tau() / N);
    double dev = 0, mult = 0;
    for (const auto& smp : tr.samples) {
        const RotatorState e = cf.state_at(smp.state.tau);
        dev = std::max({dev, max_abs((smp.state.X + smp.state.x) - (e.X + e.x)),
                        max_abs((smp.state.X - smp.state.x) - (e.X - e.x))});
        mult = std::max({mult, std::fabs(smp.state.nu), std::fabs(smp.state.beta)});
    }
    s.check("rotator_integration_vs_closed_form", "integrated established motion matches the closed form", dev, 1e-6);
    s.check("rotator_constraint_monitors", "constraint monitors after projection", tr.max_monitor, 1e-8);
    s.check("rotator_zeta_conservation", "zeta_i = eps x p P conserved", tr.zeta_drift, 1e-8);
    s.check("rotator_multipliers", "nu = 0 and beta = 0 on established motion", mult, 1e-9);

    double steady = 0;
    for (int k = 0; k <= 200; ++k) {
        const double tau = cf.period_tau() * k / 200.0;
        const RotatorState st = cf.state_at(tau);
        const Vec4 Xd(-rp.P0 / (4.0 * rp.m0), 0, 0, 0), xd = -st.p / (4.0 * rp.m0);
        const Vec4 sep = 2.0 * st.x;
        steady = std::max({steady, std::fabs(mdot(Xd + xd, sep)), std::fabs(mdot(Xd - xd, sep))});
        for (double m : constraint_monitors(st, rp)) steady = std::max(steady, std::fabs(m));
        const double t = -rp.P0 * tau / (4.0 * rp.m0);
        steady = std::max({steady, max_abs(cf.worldline1(t) - (st.X + st.x)), max_abs(cf.worldline2(t) - (st.X - st.x))});
    }
    s.check("rotator_steady_state", "closed-form worldlines satisfy the steady-state constraints", steady, 1e-12);
    s.check("rotator_subluminal", "particle speed a|omega0|/c", rp.a * std::fabs(cf.omega0) / rp.c, 1.0 - 1e-12);
    s.check("rotator_mass_increase", "(P0 - 2m0)/(2m0) equals the mass increase at a|omega0|",
            std::fabs((rp.P0 - 2.0 * rp.m0) / (2.0 * rp.m0) - mass_increase(rp.a * std::fabs(cf.omega0) * rp.c, rp.c)), 1e-12);

    RotatorParams st = rp;
    st.P0 = 2.0 * rp.m0;
    const ClosedFormRotator cs = closed_form_rotator(st);
    const RotatorTrajectory ts = integrate_rotator(st, cs.state_at(0.0), 100, 0.01);
    double stat = 0;
    for (const auto& smp : ts.samples) stat = std::max({stat, max_abs(smp.state.x - cs.state_at(0).x), max_abs(smp.state.p)});
    s.check("rotator_static_pair", "P0 = 2m0 pair stays at rest", stat, 1e-12);
}

// ---------------------------------------------------------------- consistency

void suite_consistency(Suite& s)
{
    const auto& cfg = s.cfg();
    const double m0 = cfg.m0, hbar = cfg.hbar, c = cfg.c;
    for (double v : {0.1, 0.5, 0.9}) {
        const RrToDcr id = identify_rr_to_dcr(v, m0, hbar, c, cfg.e);
        s.check("rigidity_vs_mass_increase_v" + bstr(v), "rigidity function equals relative mass increase",
                std::fabs(rigidity(id.a, m0, hbar, c) - mass_increase(v * c, c)), 1e-12);
        s.check("moment_ratio_v" + bstr(v), "magnetic moment over angular momentum = e/(4 m0 c)",
                relv(id.moment_ratio, cfg.e / (4.0 * m0 * c)), 1e-12);
    }
    DcParams p;
    p.m = cfg.m;
    p.hbar = hbar;
    p.c = c;
    for (double b : {0.1, 1.0, 10.0}) {
        const HelixSolution h = helix_solution(b, 0.0, p);
        const DcrToRr id = identify_dcr_to_rr(h.zeta, p.m);
        s.check("rigidity_vs_helix_b" + bstr(b), "helix radius and speed satisfy the rigidity relation",
                std::fabs(rigidity(h.a_dcr, id.m0, hbar, c) - mass_increase(h.v, c)), 1e-12);
    }
    const double amax = hbar / (4.0 * m0 * c);
    s.check("rigidity_spot_values", "gamma(0) = 0 and gamma(0.6 bound) = 0.25",
            std::max(std::fabs(rigidity(0.0, m0, hbar, c)), std::fabs(rigidity(0.6 * amax, m0, hbar, c) - 0.25)), 1e-12);
    double rt = 0;
    for (double zeta : {0.1, 1.0, 10.0}) {
        const DcrToRr a = identify_dcr_to_rr(zeta, p.m);
        const Observables ob = observables_from_zeta(zeta, p);
        const RrToDcr b = identify_rr_to_dcr(ob.v / c, a.m0, hbar, c, cfg.e);
        rt = std::max({rt, relv(b.m, p.m), relv(b.m_dcr, a.M), relv(b.a, ob.a_dcr), relv(b.omega_dcr, ob.omega_dcr)});
    }
    s.check("identify_round_trip", "dcr to rr and back reproduces mass, radius and frequency", rt, 1e-12);
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"algebra", suite_algebra},     {"appendixA", suite_appendix_a}, {"appendixB", suite_appendix_b},
        {"appendixC", suite_appendix_c}, {"particle", suite_particle},    {"rotator", suite_rotator},
        {"consistency", suite_consistency},
    };
    return r;
}

} // namespace

std::size_t VerificationReport::passed() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
}

std::size_t VerificationReport::failed() const { return records.size() - passed(); }

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n{"all"};
        for (const auto& [k, f] : registry()) n.push_back(k);
        return n;
    }();
    return names;
}

bool is_suite(const std::string& name)
{
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

VerificationReport run_verification(const std::string& suite, const VerifyConfig& cfg)
{
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    VerificationReport rep;
    rep.suite = suite;
    rep.seed = cfg.seed;
    rep.tol_scale = cfg.tol_scale;
    rep.notes = {
        "gamma5 = -g0g1g2g3 and sigma_a = i g^b g^c (Dirac basis); eps_0123 = +1",
        "acceleration term of the worldline action: +(hbar/2) Q (xdot x xddot).xi, contracted with xi (not z)",
        "L_q2 enters with the sign that makes L_cl + L_q1 + L_q2 the Dirac Lagrangian",
        "spin direction equation: xidot = -Q (xdot x xddot) x xi",
        "momentum P_i has covariant components; P_0 = m w0 < 0 for positive energy",
        "helix radius a_dcr = hbar (b+1) sqrt(b(b+2)) / (2 m c)",
    };
    for (const auto& [name, fn] : registry()) {
        if (suite != "all" && suite != name) continue;
        Suite s(name, cfg, rep);
        fn(s);
    }
    return rep;
}

} // namespace disquant
