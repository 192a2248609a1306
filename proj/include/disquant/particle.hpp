#pragma once

#include <utility>

#include "disquant/vec.hpp"

namespace disquant {

struct DcParams {
    double m = 1.0;
    double hbar = 1.0;
    double c = 1.0;
    Vec3 z{0, 0, 1};
    Vec4 f{1, 0, 0, 0};

    double lambda() const { return hbar / (m * c); }
};

void validate(const DcParams& p);

// Worldline quantities are expressed with x^0 = c t, so velocities are dimensionless.
struct WorldlineState {
    double tau0 = 0.0;
    Vec4 x;
    Vec4 xdot{1, 0, 0, 0};
    Vec4 xddot;
    Vec3 xi{0, 0, 1};
    Vec3 xidot;
    Vec3 y;
};

Vec3 y_from_velocity(const Vec4& xdot);

// Q(xdot, u) = 1/(s (s + xdot.u)), s = sqrt(xdot.xdot).
double q_function(const Vec4& xdot, const Vec4& u);
// dQ/dxdot^i, covariant components.
Vec4 q_gradient(const Vec4& xdot, const Vec4& u);

double lagrangian_dc(const WorldlineState& s, const DcParams& p);
// Same Lagrangian with the acceleration term written through eps_iklm and f.
double lagrangian_dc_covariant(const WorldlineState& s, const DcParams& p);

// Canonical momentum P_i (covariant components) for a general frame vector f and
// spin pseudovector nu (with its parameter derivative nudot).
Vec4 momentum_covariant(const Vec4& xdot, const Vec4& xddot, const Vec4& nu, const Vec4& nudot, const Vec4& f,
                        double m, double hbar);
Vec4 momentum(const WorldlineState& s, const Vec3& xidot, const DcParams& p);

struct Observables {
    double m_dcr = 0;
    double a_dcr = 0;
    double v = 0;
    double omega_dcr = 0;
    double zeta = 0;
    double beta = 0;
};

Observables observables(double b, const DcParams& p);
// The same observables expressed through the helix radius parameter zeta.
Observables observables_from_zeta(double zeta, const DcParams& p);
double b_from_zeta(double zeta);

struct HelixSolution {
    double b = 0;
    double w0 = -1;
    double omega = 0;   // angular rate per unit proper parameter (signed)
    double Omega = 0;   // angular rate per unit coordinate time (signed)
    double m_dcr = 0, a_dcr = 0, v = 0, omega_dcr = 0, zeta = 0, beta = 0;
    double phase = 0;
    DcParams params;

    WorldlineState state_at(double tau0) const;
    Vec4 position_at_time(double t) const;
    Vec4 velocity_at_time(double t) const;
    Vec3 xi() const { return {0, 0, 1}; }
    double period_tau() const;
};

HelixSolution helix_solution(double b, double phase, const DcParams& p);

// Residual of the relation between w0 and b obtained from the transversal equation.
double w0_relation_residual(double b, double w0);

struct ReducedResidual {
    double transverse = 0;   // vector equation for ydot
    double longitudinal = 0; // scalar equation for ydot
    double gauge = 0;        // xdot^0 = y^2 + 1
    double spin = 0;         // xidot = -(y x ydot) x xi
};

ReducedResidual reduced_system_residual(const Vec3& y, const Vec3& ydot, const Vec3& xi, const Vec3& xidot, double xdot0,
                                        double w0, double lambda);

// Returns (|left side of the xi equation|/hbar, |xidot + Q (xdot x xddot) x xi|).
std::pair<double, double> xi_equation_check(const Vec3& xi, const Vec3& xidot, const Vec4& xdot, const Vec4& xddot,
                                            const Vec3& z);

struct Relativized {
    Vec4 u;  // contravariant
    double M = 0;
};

// P given by covariant components.
Relativized relativize(const Vec4& P);

// Pure boost with velocity beta (|beta| < 1) acting on contravariant components.
Vec4 lorentz_boost(const Vec4& x, const Vec3& beta);

} // namespace disquant
