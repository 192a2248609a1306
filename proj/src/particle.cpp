#include "disquant/particle.hpp"

#include <cmath>

#include "disquant/error.hpp"

namespace disquant {

namespace {

double proper_speed(const Vec4& xdot)
{
    const double ss = mdot(xdot, xdot);
    if (!(ss > 0.0)) throw Error(ErrorKind::Domain, "velocity must be timelike");
    return std::sqrt(ss);
}

double spin_denominator(const Vec3& xi, const Vec3& z)
{
    const double d = 1.0 + dot(xi, z);
    if (d < 1e-9) throw Error(ErrorKind::Antipodal, "1+xi.z vanishes (xi antipodal to z)");
    return d;
}

Vec4 project_out(const Vec4& a, const Vec4& f) { return a - mdot(a, f) * f; }

} // namespace

void validate(const DcParams& p)
{
    if (!(p.m > 0.0) || !(p.hbar > 0.0) || !(p.c > 0.0))
        throw Error(ErrorKind::Domain, "m, hbar and c must be positive");
    if (std::fabs(norm(p.z) - 1.0) > 1e-12) throw Error(ErrorKind::Domain, "z must be a unit vector");
    if (std::fabs(mdot(p.f, p.f) - 1.0) > 1e-12 || p.f[0] <= 0.0)
        throw Error(ErrorKind::Domain, "f must be a future unit timelike vector");
}

Vec3 y_from_velocity(const Vec4& xdot) { return xdot.spatial() / std::sqrt(1.0 + xdot[0]); }

double q_function(const Vec4& xdot, const Vec4& u)
{
    const double s = proper_speed(xdot);
    const double d = s + mdot(xdot, u);
    if (d < 1e-9) throw Error(ErrorKind::Domain, "sqrt(xdot.xdot)+xdot.u vanishes");
    return 1.0 / (s * d);
}

Vec4 q_gradient(const Vec4& xdot, const Vec4& u)
{
    const double s = proper_speed(xdot);
    const double xu = mdot(xdot, u);
    const double d = s + xu;
    if (d < 1e-9) throw Error(ErrorKind::Domain, "sqrt(xdot.xdot)+xdot.u vanishes");
    const Vec4 xl = flip(xdot), ul = flip(u);
    return -((xu + 2.0 * s) * xl + (s * s) * ul) / (s * s * s * d * d);
}

double lagrangian_dc(const WorldlineState& s, const DcParams& p)
{
    const double sp = proper_speed(s.xdot);
    const double d = spin_denominator(s.xi, p.z);
    const double Q = q_function(s.xdot, Vec4(1, 0, 0, 0));
    return -p.m * sp + p.hbar * dot(cross(s.xidot, s.xi), p.z) / (2.0 * d)
         + 0.5 * p.hbar * Q * dot(cross(s.xdot.spatial(), s.xddot.spatial()), s.xi);
}

double lagrangian_dc_covariant(const WorldlineState& s, const DcParams& p)
{
    const double sp = proper_speed(s.xdot);
    const double d = spin_denominator(s.xi, p.z);
    const Vec4 nu = project_out(Vec4(0.0, s.xi), p.f);
    const double Q = q_function(s.xdot, p.f);
    return -p.m * sp + p.hbar * dot(cross(s.xidot, s.xi), p.z) / (2.0 * d)
         + 0.5 * p.hbar * Q * eps4(s.xdot, s.xddot, p.f, nu);
}

Vec4 momentum_covariant(const Vec4& xdot, const Vec4& xddot, const Vec4& nu, const Vec4& nudot, const Vec4& f,
                        double m, double hbar)
{
    const double sp = proper_speed(xdot);
    const double Q = q_function(xdot, f);
    const Vec4 Qg = q_gradient(xdot, f);
    double Qdot = 0;
    for (int i = 0; i < 4; ++i) Qdot += Qg[i] * xddot[i];
    const double T = eps4(xdot, xddot, f, nu);
    const Vec4 xl = flip(xdot);
    Vec4 P;
    for (int i = 0; i < 4; ++i) {
        const Vec4 ei = basis4(i);
        const double e1 = eps4(ei, xddot, f, nu);
        const double e2 = eps4(ei, xdot, f, nu);
        const double e3 = eps4(ei, xdot, f, nudot);
        P[i] = -m * xl[i] / sp + 0.5 * hbar * (2.0 * Q * e1 + Qdot * e2 + Q * e3 + Qg[i] * T);
    }
    return P;
}

Vec4 momentum(const WorldlineState& s, const Vec3& xidot, const DcParams& p)
{
    spin_denominator(s.xi, p.z);
    const Vec4 nu = project_out(Vec4(0.0, s.xi), p.f);
    const Vec4 nudot = project_out(Vec4(0.0, xidot), p.f);
    return momentum_covariant(s.xdot, s.xddot, nu, nudot, p.f, p.m, p.hbar);
}

Observables observables(double b, const DcParams& p)
{
    if (!(b >= 0.0)) throw Error(ErrorKind::Domain, "helix constant b must be nonnegative");
    const double r = std::sqrt(b * (b + 2.0));
    Observables o;
    o.m_dcr = p.m / (b + 1.0);
    o.a_dcr = p.lambda() * (b + 1.0) * r / 2.0;
    o.v = p.c * r / (b + 1.0);
    o.omega_dcr = 2.0 * p.m * p.c * p.c / (p.hbar * (b + 1.0) * (b + 1.0));
    o.zeta = 2.0 * (b + 1.0) * r;
    o.beta = std::asinh(r);
    return o;
}

Observables observables_from_zeta(double zeta, const DcParams& p)
{
    if (!(zeta >= 0.0)) throw Error(ErrorKind::Domain, "zeta must be nonnegative");
    const double s1 = std::sqrt(1.0 + zeta * zeta) + 1.0;
    Observables o;
    o.zeta = zeta;
    o.m_dcr = p.m * std::sqrt(2.0) / std::sqrt(s1);
    o.v = p.c * zeta / s1;
    o.omega_dcr = 4.0 * p.m * p.c * p.c / (p.hbar * s1);
    o.a_dcr = zeta * p.hbar / (4.0 * p.m * p.c);
    o.beta = 0.5 * std::asinh(zeta);
    return o;
}

double b_from_zeta(double zeta) { return std::sqrt(0.5 * (1.0 + std::sqrt(1.0 + zeta * zeta))) - 1.0; }

HelixSolution helix_solution(double b, double phase, const DcParams& p)
{
    validate(p);
    const Observables o = observables(b, p);
    HelixSolution h;
    h.params = p;
    h.b = b;
    h.phase = phase;
    h.w0 = -1.0 / (b + 1.0);
    h.omega = (-(1.0 - h.w0) / (b + 2.0) + h.w0) / p.lambda();
    h.Omega = p.c * h.omega / (b + 1.0);
    h.m_dcr = o.m_dcr;
    h.a_dcr = o.a_dcr;
    h.v = o.v;
    h.omega_dcr = o.omega_dcr;
    h.zeta = o.zeta;
    h.beta = o.beta;
    return h;
}

double HelixSolution::period_tau() const { return 2.0 * M_PI / std::fabs(omega); }

WorldlineState HelixSolution::state_at(double tau0) const
{
    const double th = omega * tau0 + phase;
    const double sb = std::sqrt(b), sb2 = std::sqrt(b + 2.0);
    const double c = std::cos(th), s = std::sin(th);
    WorldlineState w;
    w.tau0 = tau0;
    w.y = Vec3(sb * c, sb * s, 0.0);
    const Vec3 ydot(-omega * sb * s, omega * sb * c, 0.0);
    w.xdot = Vec4(b + 1.0, sb2 * w.y);
    w.xddot = Vec4(0.0, sb2 * ydot);
    const double amp = sb * sb2 / omega;
    w.x = Vec4((b + 1.0) * tau0, amp * s, -amp * c, 0.0);
    w.xi = xi();
    w.xidot = Vec3();
    return w;
}

Vec4 HelixSolution::position_at_time(double t) const
{
    const double th = Omega * t + phase;
    return {params.c * t, -a_dcr * std::sin(th), a_dcr * std::cos(th), 0.0};
}

Vec4 HelixSolution::velocity_at_time(double t) const
{
    const double th = Omega * t + phase;
    return {params.c, -a_dcr * Omega * std::cos(th), -a_dcr * Omega * std::sin(th), 0.0};
}

double w0_relation_residual(double b, double w0)
{
    const double k = 1.0 - (1.0 - w0) / (b + 2.0);
    return -(-(1.0 - w0) / (b + 2.0) + w0) * b - 2.0 * k;
}

ReducedResidual reduced_system_residual(const Vec3& y, const Vec3& ydot, const Vec3& xi, const Vec3& xidot, double xdot0,
                                        double w0, double lambda)
{
    const double y2 = dot(y, y);
    const double g = (1.0 - w0) / (y2 + 2.0);
    ReducedResidual r;
    r.transverse = max_abs(lambda * cross(ydot, xi + 0.5 * dot(y, xi) * y) + (g - w0) * y);
    r.longitudinal = std::fabs(lambda * dot(ydot, cross(y, xi)) - 2.0 * (1.0 - g));
    r.gauge = std::fmax(std::fabs(xdot0 - (y2 + 1.0)), std::fabs(std::sqrt(1.0 + y2 * (y2 + 2.0)) - (y2 + 1.0)));
    r.spin = max_abs(xidot + cross(cross(y, ydot), xi));
    return r;
}

std::pair<double, double> xi_equation_check(const Vec3& xi, const Vec3& xidot, const Vec4& xdot, const Vec4& xddot,
                                            const Vec3& z)
{
    if (std::fabs(norm(xi) - 1.0) > 1e-10) throw Error(ErrorKind::Domain, "xi must be a unit vector");
    if (std::fabs(norm(z) - 1.0) > 1e-10) throw Error(ErrorKind::Domain, "z must be a unit vector");
    if (std::fabs(dot(xi, xidot)) > 1e-10) throw Error(ErrorKind::Domain, "xidot must be orthogonal to xi");
    const double d = spin_denominator(xi, z);
    const double Q = q_function(xdot, Vec4(1, 0, 0, 0));
    const Vec3 acc = cross(xdot.spatial(), xddot.spatial());
    const Vec3 xz = cross(xi, z);
    // variational derivative of the action with respect to xi, divided by hbar
    const Vec3 W = cross(z, xidot) / d + (dot(xidot, z) * xz - dot(xidot, xz) * z) / (2.0 * d * d) + 0.5 * Q * acc;
    const double r65 = max_abs(cross(W, xi));
    const double r71 = max_abs(xidot + Q * cross(acc, xi));
    return {r65, r71};
}

Relativized relativize(const Vec4& P)
{
    const double pp = mdot(P, P);
    if (!(pp > 0.0)) throw Error(ErrorKind::Domain, "momentum must be timelike");
    Relativized r;
    r.M = std::sqrt(pp);
    r.u = Vec4(-P[0], P[1], P[2], P[3]) / r.M;
    return r;
}

Vec4 lorentz_boost(const Vec4& x, const Vec3& beta)
{
    const double b2 = dot(beta, beta);
    if (!(b2 < 1.0)) throw Error(ErrorKind::Domain, "boost speed must be below c");
    if (b2 == 0.0) return x;
    const double g = 1.0 / std::sqrt(1.0 - b2);
    const Vec3 r = x.spatial();
    const double bx = dot(beta, r);
    return {g * (x[0] + bx), r + ((g - 1.0) * bx / b2 + g * x[0]) * beta};
}

} // namespace disquant
