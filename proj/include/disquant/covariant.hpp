#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>

#include "disquant/algebra.hpp"
#include "disquant/vec.hpp"

namespace disquant {

using Mat44 = std::array<std::array<double, 4>, 4>;

// Parameters and their first derivatives d_l (l = 0..3) at one spacetime point.
struct ParamJet {
    SpinorParams p;
    std::array<double, 4> dA{};
    std::array<double, 4> dkappa{};
    std::array<double, 4> dphi{};
    std::array<Vec3, 4> deta{};
    std::array<Vec3, 4> dn{};
};

// Smooth test field x -> SpinorParams with analytic first derivatives:
//   A     = A0 exp(a.x + x.B.x/2)
//   kappa = k0 + k.x + x.K.x/2
//   phi   = p0 + p.x + phase_amp sin(q.x)
//   eta_a = eta0_a + E_a.x + eta_amp sin(W_a.x)
//   n     = r/|r|, r = n0 + N x
// Dot products above are plain sums over the coordinate index.
struct ParamField {
    double A0 = 1.0;
    Vec4 a;
    Mat44 B{};
    double k0 = 0.0;
    Vec4 k;
    Mat44 K{};
    double p0 = 0.0;
    Vec4 p;
    double phase_amp = 0.0;
    Vec4 q;
    Vec3 eta0;
    std::array<Vec4, 3> E{};
    double eta_amp = 0.0;
    std::array<Vec4, 3> W{};
    Vec3 n0{0, 0, 1};
    std::array<Vec4, 3> N{};
    Vec3 z{0, 0, 1};

    static ParamField constant(const SpinorParams& sp);
    static ParamField random(std::mt19937_64& rng);

    SpinorParams at(const Vec4& x) const;
    ParamJet jet(const Vec4& x) const;
};

// Random field together with a point where the field is regular and unit-scale.
std::pair<ParamField, Vec4> random_field_point(std::uint64_t seed);

struct CovariantAux {
    Vec4 f{1, 0, 0, 0};
    Vec4 z4;
    Vec4 nu;
    Vec4 mu;
    Vec4 q;
};

struct LagrangianPieces {
    double F1 = 0, F2 = 0;
    double F3 = 0;          // three-dimensional form
    double F3_cov = 0;      // mu-form, normalization inside the derivative
    double F3_cov_out = 0;  // nu-form, normalization outside the derivative
    double F4 = 0;          // three-dimensional form
    double F4_cov = 0;      // flux form with J = j + f rho
    double F4_q = 0;        // unit-vector form with q
    double L_cl = 0, L_q1 = 0, L_q2 = 0;
    Bilinears bil;
    CovariantAux aux;

    double kinetic() const { return F1 + F2 + F3 + F4; }
};

// Longitudinal and transversal parts of a derivative with respect to the flux j.
std::pair<Vec4, Vec4> split_derivative(const Vec4& j, const Vec4& grad);

double quasi_uniformity(const Vec4& j, const Vec4& grad_u, double u, double m, double hbar, double c = 1.0);

LagrangianPieces lagrangian_pieces(const ParamField& field, const Vec4& x, double m, double hbar);

struct KineticTerm {
    double value = 0;        // real coefficient of Pi
    double imag = 0;         // imaginary part of that coefficient
    double off_pi = 0;       // max |product - coefficient * Pi|
};

KineticTerm kinetic_term_full(const ParamField& field, const Vec4& x, const GammaBasis& g, double hbar, double h);
double kinetic_term_matrix(const ParamField& field, const Vec4& x, const GammaBasis& g, double hbar, double h);

struct MassBranch {
    bool stationary = false;
    double cos_kappa = 0;
};

MassBranch effective_mass_branch(double kappa);
// Representative of the stable branch (m_eff = +m).
inline double stable_kappa() { return 0.0; }

} // namespace disquant
