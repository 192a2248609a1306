#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "disquant/vec.hpp"

namespace disquant {

struct RotatorParams {
    double m0 = 1.0;
    double a = 1.0;
    double P0 = 2.0 * 1.4142135623730951;
    double phase = 0.0;
    double c = 1.0;
    double hbar = 1.0;
};

// All 4-vectors contravariant. P has covariant components (P0, 0, 0, 0).
struct RotatorState {
    double tau = 0.0;
    Vec4 X, x, p, P;
    double beta = 0.0;
    double nu = 0.0;
    double mu_dot = 0.0;
};

struct ClosedFormRotator {
    RotatorParams params;
    double omega = 0;    // per unit tau
    double omega0 = 0;   // per unit coordinate time

    RotatorState state_at(double tau) const;
    Vec4 worldline1(double t) const;
    Vec4 worldline2(double t) const;
    double period_tau() const;
    double period_time() const;
};

ClosedFormRotator closed_form_rotator(const RotatorParams& p);

// x.x + a^2, p.x, P.p, p.p + (P.P - 4 m0^2) + a^2 nu^2, Xdot.x
std::array<double, 5> constraint_monitors(const RotatorState& s, const RotatorParams& p);
// zeta_i = eps_iklm x^k p^l P^m (covariant components)
Vec4 rotator_zeta(const RotatorState& s);

struct RotatorSample {
    RotatorState state;
    std::array<double, 5> monitors{};
    Vec4 zeta;
};

struct RotatorTrajectory {
    std::vector<RotatorSample> samples;
    double max_monitor = 0;
    double max_pre_projection_drift = 0;
    double zeta_drift = 0;  // max relative drift of zeta
};

RotatorTrajectory integrate_rotator(const RotatorParams& p, const RotatorState& initial, std::size_t steps, double dt);

double mass_increase(double v, double c = 1.0);
double rigidity(double a, double m0, double hbar, double c = 1.0);

struct RigidityCurve {
    double m0 = 1, hbar = 1, c = 1;
    double a_bound = 0;  // hbar/(4 m0 c)
    std::vector<std::pair<double, double>> samples;
};

RigidityCurve rigidity_curve(double m0, double hbar, double c, double a_min, double a_max, std::size_t n);

struct DcrToRr {
    double zeta = 0, m = 0;
    double M = 0, m0 = 0;
};

// v is the rotation speed as a fraction of c.
struct RrToDcr {
    double v = 0, m0 = 0;
    double m = 0, m_dcr = 0, omega_dcr = 0, a = 0;
    double angular_momentum = 0, magnetic_moment = 0, moment_ratio = 0;
};

DcrToRr identify_dcr_to_rr(double zeta, double m);
RrToDcr identify_rr_to_dcr(double v, double m0, double hbar = 1.0, double c = 1.0, double e = 1.0);

} // namespace disquant
