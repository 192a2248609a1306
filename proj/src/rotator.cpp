#include "disquant/rotator.hpp"

#include <cmath>

#include "disquant/error.hpp"

namespace disquant {

namespace {

void validate(const RotatorParams& p)
{
    if (!(p.m0 > 0.0) || !(p.a > 0.0) || !(p.c > 0.0) || !(p.hbar > 0.0))
        throw Error(ErrorKind::Domain, "m0, a, c and hbar must be positive");
    if (!(p.P0 >= 2.0 * p.m0)) throw Error(ErrorKind::SubThreshold, "total energy P0 is below 2 m0");
}

double rotation_rate(const RotatorParams& p)
{
    return std::sqrt(p.P0 * p.P0 - 4.0 * p.m0 * p.m0) / (4.0 * p.m0 * p.a);
}

struct Deriv {
    Vec4 X, x, p;
};

double multiplier_nu(const Vec4& x, const Vec4& P, double a) { return -mdot(P, x) / (a * a); }

// Established-motion branch, beta = 0.
Deriv rhs(const Vec4& x, const Vec4& p, const Vec4& P, const RotatorParams& rp)
{
    const double m4 = 4.0 * rp.m0;
    const double nu = multiplier_nu(x, P, rp.a);
    Deriv d;
    d.X = -(P - nu * x) / m4;
    d.x = -p / m4;
    d.p = -((4.0 * rp.m0 * rp.m0 - mdot(P, P)) / (m4 * rp.a * rp.a)) * x - (nu / m4) * P;
    return d;
}

void fill_multipliers(RotatorState& s, const RotatorParams& p)
{
    s.beta = 0.0;
    s.nu = multiplier_nu(s.x, s.P, p.a);
    s.mu_dot = -mdot(s.p, s.p) / (8.0 * p.m0 * p.a * p.a);
}

RotatorSample make_sample(const RotatorState& s, const RotatorParams& p)
{
    RotatorSample r;
    r.state = s;
    r.monitors = constraint_monitors(s, p);
    r.zeta = rotator_zeta(s);
    return r;
}

} // namespace

ClosedFormRotator closed_form_rotator(const RotatorParams& p)
{
    validate(p);
    ClosedFormRotator r;
    r.params = p;
    r.omega = rotation_rate(p);
    r.omega0 = -std::sqrt(p.P0 * p.P0 - 4.0 * p.m0 * p.m0) / (p.a * p.P0);
    return r;
}

RotatorState ClosedFormRotator::state_at(double tau) const
{
    const auto& p = params;
    const double th = omega * tau + p.phase;
    const double pm = 4.0 * p.a * p.m0 * omega;
    RotatorState s;
    s.tau = tau;
    s.x = Vec4(0.0, p.a * std::cos(th), p.a * std::sin(th), 0.0);
    s.p = Vec4(0.0, pm * std::sin(th), -pm * std::cos(th), 0.0);
    s.X = Vec4(-p.P0 * tau / (4.0 * p.m0), 0.0, 0.0, 0.0);
    s.P = Vec4(p.P0, 0.0, 0.0, 0.0);
    fill_multipliers(s, p);
    return s;
}

Vec4 ClosedFormRotator::worldline1(double t) const
{
    const double th = omega0 * t + params.phase;
    return {t, params.a * std::cos(th), params.a * std::sin(th), 0.0};
}

Vec4 ClosedFormRotator::worldline2(double t) const
{
    const double th = omega0 * t + params.phase;
    return {t, -params.a * std::cos(th), -params.a * std::sin(th), 0.0};
}

double ClosedFormRotator::period_tau() const { return omega > 0 ? 2.0 * M_PI / omega : INFINITY; }
double ClosedFormRotator::period_time() const { return omega0 != 0 ? 2.0 * M_PI / std::fabs(omega0) : INFINITY; }

std::array<double, 5> constraint_monitors(const RotatorState& s, const RotatorParams& p)
{
    const Deriv d = rhs(s.x, s.p, s.P, p);
    const double nu = multiplier_nu(s.x, s.P, p.a);
    return {mdot(s.x, s.x) + p.a * p.a, mdot(s.p, s.x), mdot(s.P, s.p),
            mdot(s.p, s.p) + (mdot(s.P, s.P) - 4.0 * p.m0 * p.m0) + p.a * p.a * nu * nu, mdot(d.X, s.x)};
}

Vec4 rotator_zeta(const RotatorState& s)
{
    Vec4 z;
    for (int i = 0; i < 4; ++i) z[i] = eps4(basis4(i), s.x, s.p, s.P);
    return z;
}

RotatorTrajectory integrate_rotator(const RotatorParams& p, const RotatorState& initial, std::size_t steps, double dt)
{
    validate(p);
    if (!(dt > 0.0)) throw Error(ErrorKind::Domain, "time step must be positive");
    const double w = rotation_rate(p);
    if (w * dt >= 0.1) throw Error(ErrorKind::Stability, "omega*dt must stay below 0.1");
    for (double m : constraint_monitors(initial, p))
        if (std::fabs(m) > 1e-10) throw Error(ErrorKind::Domain, "initial state violates the rotator constraints");

    RotatorTrajectory traj;
    traj.samples.reserve(steps + 1);
    RotatorState s = initial;
    fill_multipliers(s, p);
    traj.samples.push_back(make_sample(s, p));
    const Vec4 zeta0 = traj.samples.front().zeta;
    const double zscale = std::fmax(max_abs(zeta0), 1e-300);
    const double a2 = p.a * p.a;

    for (std::size_t n = 0; n < steps; ++n) {
        const Vec4& P = s.P;
        const Deriv k1 = rhs(s.x, s.p, P, p);
        const Deriv k2 = rhs(s.x + (0.5 * dt) * k1.x, s.p + (0.5 * dt) * k1.p, P, p);
        const Deriv k3 = rhs(s.x + (0.5 * dt) * k2.x, s.p + (0.5 * dt) * k2.p, P, p);
        const Deriv k4 = rhs(s.x + dt * k3.x, s.p + dt * k3.p, P, p);
        const double w6 = dt / 6.0;
        s.X += w6 * (k1.X + 2.0 * k2.X + 2.0 * k3.X + k4.X);
        s.x += w6 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        s.p += w6 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
        s.tau = initial.tau + static_cast<double>(n + 1) * dt;

        const double xx = mdot(s.x, s.x);
        const double pnorm = std::sqrt(std::fabs(mdot(s.p, s.p)));
        const double drift = std::fmax(std::fabs(xx + a2) / a2,
                                       pnorm > 0 ? std::fabs(mdot(s.p, s.x)) / (pnorm * p.a) : 0.0);
        traj.max_pre_projection_drift = std::fmax(traj.max_pre_projection_drift, drift);
        if (drift > 1e-6) throw Error(ErrorKind::StepSize, "constraint drift before projection exceeds 1e-6");

        s.x = std::sqrt(-a2 / xx) * s.x;
        s.p = s.p - (mdot(s.p, P) / mdot(P, P)) * P;
        s.p = s.p - (mdot(s.p, s.x) / mdot(s.x, s.x)) * s.x;
        fill_multipliers(s, p);

        RotatorSample smp = make_sample(s, p);
        for (double m : smp.monitors) traj.max_monitor = std::fmax(traj.max_monitor, std::fabs(m));
        traj.zeta_drift = std::fmax(traj.zeta_drift, max_abs(smp.zeta - zeta0) / zscale);
        traj.samples.push_back(smp);
    }
    for (double m : traj.samples.front().monitors) traj.max_monitor = std::fmax(traj.max_monitor, std::fabs(m));
    return traj;
}

double mass_increase(double v, double c)
{
    if (!(c > 0.0)) throw Error(ErrorKind::Domain, "c must be positive");
    if (!(v >= 0.0) || !(v < c)) throw Error(ErrorKind::Domain, "speed must satisfy 0 <= v < c");
    const double b = v / c;
    return 1.0 / std::sqrt(1.0 - b * b) - 1.0;
}

double rigidity(double a, double m0, double hbar, double c)
{
    if (!(m0 > 0.0) || !(hbar > 0.0) || !(c > 0.0)) throw Error(ErrorKind::Domain, "m0, hbar and c must be positive");
    const double k = 4.0 * a * m0 * c;
    if (!(a >= 0.0) || !(k < hbar)) throw Error(ErrorKind::Domain, "radius must satisfy 0 <= a < hbar/(4 m0 c)");
    return hbar / std::sqrt(hbar * hbar - k * k) - 1.0;
}

RigidityCurve rigidity_curve(double m0, double hbar, double c, double a_min, double a_max, std::size_t n)
{
    RigidityCurve curve;
    curve.m0 = m0;
    curve.hbar = hbar;
    curve.c = c;
    curve.a_bound = hbar / (4.0 * m0 * c);
    if (n < 2) throw Error(ErrorKind::Domain, "rigidity curve needs at least two samples");
    if (!(a_min >= 0.0) || !(a_min < a_max)) throw Error(ErrorKind::Domain, "need 0 <= a_min < a_max");
    if (!(a_max < curve.a_bound)) throw Error(ErrorKind::Domain, "a_max must stay below hbar/(4 m0 c)");
    curve.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = a_min + (a_max - a_min) * static_cast<double>(i) / static_cast<double>(n - 1);
        curve.samples.emplace_back(a, rigidity(a, m0, hbar, c));
    }
    return curve;
}

DcrToRr identify_dcr_to_rr(double zeta, double m)
{
    if (!(zeta >= 0.0)) throw Error(ErrorKind::Domain, "zeta must be nonnegative");
    if (!(m > 0.0)) throw Error(ErrorKind::Domain, "mass must be positive");
    const double s1 = std::sqrt(1.0 + zeta * zeta) + 1.0;
    DcrToRr r;
    r.zeta = zeta;
    r.m = m;
    r.M = m * std::sqrt(2.0) / std::sqrt(s1);
    r.m0 = m / s1;
    return r;
}

RrToDcr identify_rr_to_dcr(double v, double m0, double hbar, double c, double e)
{
    if (!(v >= 0.0) || !(v < 1.0)) throw Error(ErrorKind::Domain, "speed fraction must satisfy 0 <= v < 1");
    if (!(m0 > 0.0) || !(hbar > 0.0) || !(c > 0.0)) throw Error(ErrorKind::Domain, "m0, hbar and c must be positive");
    const double g2 = 1.0 - v * v;
    RrToDcr r;
    r.v = v;
    r.m0 = m0;
    r.m = 2.0 * m0 / g2;
    r.m_dcr = 2.0 * m0 / std::sqrt(g2);
    r.omega_dcr = 4.0 * m0 * c * c / hbar;
    r.a = v * hbar / (4.0 * m0 * c);
    r.angular_momentum = 2.0 * m0 * r.a * v * c / std::sqrt(g2);
    r.magnetic_moment = e * r.a * v / (2.0 * std::sqrt(g2));
    r.moment_ratio = r.angular_momentum > 0 ? r.magnetic_moment / r.angular_momentum : e / (4.0 * m0 * c);
    return r;
}

} // namespace disquant
