#include "disquant/covariant.hpp"

#include <cmath>

#include "disquant/error.hpp"

namespace disquant {

namespace {

double lin(const Vec4& c, const Vec4& x) { return c[0] * x[0] + c[1] * x[1] + c[2] * x[2] + c[3] * x[3]; }

Vec4 mat_vec(const Mat44& m, const Vec4& x)
{
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = lin(Vec4(m[i][0], m[i][1], m[i][2], m[i][3]), x);
    return r;
}

Mat44 random_sym(std::mt19937_64& rng, double s)
{
    std::normal_distribution<double> nd(0.0, s);
    Mat44 m{};
    for (int i = 0; i < 4; ++i)
        for (int k = i; k < 4; ++k) m[i][k] = m[k][i] = nd(rng);
    return m;
}

Vec4 random4(std::mt19937_64& rng, double s)
{
    std::normal_distribution<double> nd(0.0, s);
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = nd(rng);
    return v;
}

Vec3 random_unit(std::mt19937_64& rng)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    for (;;) {
        Vec3 v{nd(rng), nd(rng), nd(rng)};
        double r = norm(v);
        if (r > 1e-3) return v / r;
    }
}

// Everything the Lagrangian pieces need at one point.
struct Local {
    double rho;
    std::array<double, 4> drho;
    double eta;
    Vec3 v;
    std::array<double, 4> deta;
    std::array<Vec3, 4> dv;
    Vec4 j;
    std::array<Vec4, 4> dj;
    Bilinears bil;
    Vec3 xi;
    std::array<Vec3, 4> dxi;
};

Local local_fields(const ParamJet& jt)
{
    Local L{};
    const auto& p = jt.p;
    L.bil = bilinears_closed_form(p);
    L.rho = p.A * p.A;
    L.eta = norm(p.eta);
    const bool tiny = L.eta < 1e-8;
    if (!tiny) L.v = p.eta / L.eta;
    // sinh(eta)/eta and its eta-derivative
    double shc = tiny ? 1.0 : std::sinh(L.eta) / L.eta;
    double dshc = tiny ? L.eta / 3.0 : (L.eta * std::cosh(L.eta) - std::sinh(L.eta)) / (L.eta * L.eta);
    L.j = L.bil.j;
    L.xi = p.xi();
    const double nz = dot(p.n, p.z);
    for (int l = 0; l < 4; ++l) {
        L.drho[l] = 2.0 * p.A * jt.dA[l];
        L.deta[l] = tiny ? 0.0 : dot(L.v, jt.deta[l]);
        if (!tiny) L.dv[l] = (jt.deta[l] - L.deta[l] * L.v) / L.eta;
        double ee = dot(p.eta, jt.deta[l]);
        L.dj[l][0] = L.drho[l] * std::cosh(L.eta) + L.rho * shc * ee;
        for (int a = 0; a < 3; ++a)
            L.dj[l][a + 1] = L.drho[l] * shc * p.eta[a]
                           + L.rho * (tiny ? 0.0 : dshc * L.deta[l]) * p.eta[a]
                           + L.rho * shc * jt.deta[l][a];
        L.dxi[l] = 2.0 * nz * jt.dn[l] + 2.0 * dot(jt.dn[l], p.z) * p.n;
    }
    return L;
}

Vec4 spatial4(const Vec3& s) { return {0.0, s}; }

} // namespace

ParamField ParamField::constant(const SpinorParams& sp)
{
    validate(sp);
    ParamField f;
    f.A0 = sp.A;
    f.k0 = sp.kappa;
    f.p0 = sp.phi;
    f.eta0 = sp.eta;
    f.n0 = sp.n;
    f.z = sp.z;
    return f;
}

ParamField ParamField::random(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    ParamField f;
    f.A0 = 0.8 + 0.4 * u01(rng);
    f.a = random4(rng, 0.3);
    f.B = random_sym(rng, 0.2);
    f.k0 = M_PI * (2.0 * u01(rng) - 1.0);
    f.k = random4(rng, 0.5);
    f.K = random_sym(rng, 0.3);
    f.p0 = M_PI * (2.0 * u01(rng) - 1.0);
    f.p = random4(rng, 1.0);
    f.phase_amp = 0.3;
    f.q = random4(rng, 1.0);
    f.eta0 = (0.5 + u01(rng)) * random_unit(rng);
    for (int a = 0; a < 3; ++a) {
        f.E[a] = random4(rng, 0.4);
        f.W[a] = random4(rng, 1.0);
        f.N[a] = random4(rng, 0.5);
    }
    f.eta_amp = 0.2;
    f.n0 = random_unit(rng);
    f.z = random_unit(rng);
    return f;
}

SpinorParams ParamField::at(const Vec4& x) const { return jet(x).p; }

ParamJet ParamField::jet(const Vec4& x) const
{
    ParamJet jt;
    auto& sp = jt.p;
    const Vec4 Bx = mat_vec(B, x), Kx = mat_vec(K, x);
    sp.A = A0 * std::exp(lin(a, x) + 0.5 * lin(Bx, x));
    sp.kappa = k0 + lin(k, x) + 0.5 * lin(Kx, x);
    const double qx = lin(q, x);
    sp.phi = p0 + lin(p, x) + phase_amp * std::sin(qx);
    Vec3 r = n0;
    for (int c = 0; c < 3; ++c) {
        sp.eta[c] = eta0[c] + lin(E[c], x) + eta_amp * std::sin(lin(W[c], x));
        r[c] += lin(N[c], x);
    }
    const double rn = norm(r);
    if (rn < 1e-12) throw Error(ErrorKind::Domain, "direction field n vanishes");
    sp.n = r / rn;
    sp.z = z;
    for (int l = 0; l < 4; ++l) {
        jt.dA[l] = sp.A * (a[l] + Bx[l]);
        jt.dkappa[l] = k[l] + Kx[l];
        jt.dphi[l] = p[l] + phase_amp * std::cos(qx) * q[l];
        Vec3 dr;
        for (int c = 0; c < 3; ++c) {
            jt.deta[l][c] = E[c][l] + eta_amp * std::cos(lin(W[c], x)) * W[c][l];
            dr[c] = N[c][l];
        }
        jt.dn[l] = (dr - dot(sp.n, dr) * sp.n) / rn;
    }
    return jt;
}

std::pair<ParamField, Vec4> random_field_point(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-0.5, 0.5);
    for (;;) {
        ParamField f = ParamField::random(rng);
        for (int t = 0; t < 50; ++t) {
            Vec4 x(ux(rng), ux(rng), ux(rng), ux(rng));
            Vec3 r = f.n0;
            for (int c = 0; c < 3; ++c) r[c] += lin(f.N[c], x);
            if (norm(r) < 0.3) continue;
            SpinorParams sp = f.at(x);
            if (norm(sp.eta) < 0.2 || norm(sp.eta) > 3.0) continue;
            if (1.0 + dot(sp.xi(), sp.z) < 0.05) continue;
            return {f, x};
        }
    }
}

std::pair<Vec4, Vec4> split_derivative(const Vec4& j, const Vec4& grad)
{
    const double jj = mdot(j, j);
    if (!(jj > 0.0)) throw Error(ErrorKind::LightlikeFlux, "flux must be timelike for the derivative split");
    Vec4 par = (mdot(j, grad) / jj) * j;
    return {par, grad - par};
}

double quasi_uniformity(const Vec4& j, const Vec4& grad_u, double u, double m, double hbar, double c)
{
    const double jj = mdot(j, j);
    if (!(jj > 0.0)) throw Error(ErrorKind::LightlikeFlux, "flux must be timelike");
    if (std::fabs(u) < 1e-300) throw Error(ErrorKind::Division, "field value u vanishes");
    const double jg = mdot(j, grad_u);
    double rad = jg * jg / jj - mdot(grad_u, grad_u);
    if (rad < -1e-12) throw Error(ErrorKind::NumericConsistency, "negative transversal radicand");
    if (rad < 0.0) rad = 0.0;
    return hbar / (m * c) * std::sqrt(rad) / std::fabs(u);
}

LagrangianPieces lagrangian_pieces(const ParamField& field, const Vec4& x, double m, double hbar)
{
    const ParamJet jt = field.jet(x);
    const Local L = local_fields(jt);
    const auto& sp = jt.p;

    LagrangianPieces out;
    out.bil = L.bil;
    CovariantAux& aux = out.aux;
    const Vec4 f = aux.f;
    const Vec3 z = sp.z;
    aux.z4 = spatial4(z);

    const double xz1 = 1.0 + dot(L.xi, z);
    if (xz1 < 1e-9) throw Error(ErrorKind::Antipodal, "1+xi.z vanishes (xi antipodal to z)");
    const double rjf = L.rho + mdot(f, L.j);
    if (rjf < 1e-9) throw Error(ErrorKind::Domain, "rho+j.f vanishes");

    const Vec4 xi4 = spatial4(L.xi);
    aux.nu = xi4 - mdot(xi4, f) * f;
    const double nmu = std::sqrt(2.0 * xz1);
    aux.mu = aux.nu / nmu;
    const Vec4 J = L.j + L.rho * f;
    const double nq = std::sqrt(2.0 * L.rho * rjf);
    aux.q = J / nq;

    std::array<Vec4, 4> dnu, dmu, dJ, dq;
    for (int l = 0; l < 4; ++l) {
        const Vec4 dxi4 = spatial4(L.dxi[l]);
        dnu[l] = dxi4 - mdot(dxi4, f) * f;
        const double dnmu = dot(L.dxi[l], z) / nmu;
        dmu[l] = dnu[l] / nmu - (dnmu / (nmu * nmu)) * aux.nu;
        dJ[l] = L.dj[l] + L.drho[l] * f;
        const double dnq = (L.drho[l] * rjf + L.rho * (L.drho[l] + mdot(f, L.dj[l]))) / nq;
        dq[l] = dJ[l] / nq - (dnq / (nq * nq)) * J;
    }

    double F1 = 0, F2 = 0, F3 = 0, F3c = 0, F3o = 0, F4c = 0, F4q = 0;
    for (int l = 0; l < 4; ++l) {
        F1 += L.j[l] * jt.dphi[l];
        F2 += L.bil.S[l] * jt.dkappa[l];
        F3 += L.j[l] * dot(cross(L.xi, L.dxi[l]), z);
        F3c += L.j[l] * eps4(aux.mu, dmu[l], aux.z4, f);
        F3o += L.j[l] * eps4(aux.nu, dnu[l], aux.z4, f);
        const Vec4 ek = basis4(l);
        F4c += metric[l] * eps4(dJ[l], ek, J, aux.nu);
        F4q += metric[l] * eps4(aux.q, ek, dq[l], aux.nu);
    }
    out.F1 = -hbar * F1;
    out.F2 = -0.5 * hbar * F2;
    out.F3 = -hbar * F3 / (2.0 * xz1);
    out.F3_cov = hbar * F3c;
    out.F3_cov_out = hbar * F3o / (2.0 * xz1);
    out.F4_cov = -hbar * F4c / (2.0 * rjf);
    out.F4_q = hbar * L.rho * F4q;

    // three-dimensional F4
    const double sh = std::sinh(L.eta);
    const double sh2 = 2.0 * std::sinh(0.5 * L.eta) * std::sinh(0.5 * L.eta);
    double F4 = 0;
    for (int al = 0; al < 3; ++al) {
        const int l = al + 1;
        Vec3 X = L.eta < 1e-8 ? jt.deta[l]
                              : L.deta[l] * L.v + sh * L.dv[l] + sh2 * L.v[al] * L.dv[0];
        F4 += cross(X, L.xi)[al];
    }
    out.F4 = -0.5 * hbar * L.rho * F4;

    out.L_cl = -m * L.rho + out.F1 + out.F3_cov;
    const double s2 = std::sin(0.5 * sp.kappa);
    out.L_q1 = 2.0 * m * L.rho * s2 * s2 + out.F2;
    out.L_q2 = out.F4_q;
    return out;
}

KineticTerm kinetic_term_full(const ParamField& field, const Vec4& x, const GammaBasis& g, double hbar, double h)
{
    if (!(h >= 1e-6 && h <= 1e-3)) throw Error(ErrorKind::Domain, "finite-difference step must lie in [1e-6, 1e-3]");
    const Mat4& Pi = g.pi_projector;
    const Mat4 psi = spinor_operator(field.at(x), g) * Pi;
    const Mat4 psibar = psi.adjoint() * g.gamma[0];
    Mat4 acc;
    for (int l = 0; l < 4; ++l) {
        Vec4 xp = x, xm = x;
        xp[l] += h;
        xm[l] -= h;
        const Mat4 dpsi = cplx(0.5 / h) * (spinor_operator(field.at(xp), g) * Pi - spinor_operator(field.at(xm), g) * Pi);
        const Mat4 dpsibar = dpsi.adjoint() * g.gamma[0];
        acc = acc + (psibar * g.gamma[l] * dpsi - dpsibar * g.gamma[l] * psi);
    }
    acc = cplx(0.0, 0.5 * hbar) * acc;
    const cplx coef = acc.trace();  // trace(Pi) = 1
    KineticTerm k;
    k.value = coef.real();
    k.imag = coef.imag();
    k.off_pi = (acc - coef * Pi).max_abs();
    return k;
}

double kinetic_term_matrix(const ParamField& field, const Vec4& x, const GammaBasis& g, double hbar, double h)
{
    KineticTerm k = kinetic_term_full(field, x, g, hbar, h);
    if (k.off_pi > 1e-6 || std::fabs(k.imag) > 1e-6)
        throw Error(ErrorKind::NumericConsistency, "kinetic term is not a real multiple of the projector");
    return k.value;
}

MassBranch effective_mass_branch(double kappa)
{
    MassBranch b;
    b.cos_kappa = std::cos(kappa);
    if (std::fabs(std::sin(kappa)) < 1e-9) {
        b.stationary = true;
        b.cos_kappa = b.cos_kappa > 0 ? 1.0 : -1.0;
    }
    return b;
}

} // namespace disquant
