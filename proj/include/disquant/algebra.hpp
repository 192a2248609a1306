#pragma once

#include <array>
#include <complex>

#include "disquant/vec.hpp"

namespace disquant {

using cplx = std::complex<double>;

struct Mat4 {
    std::array<cplx, 16> a{};

    cplx& operator()(int r, int c) { return a[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return a[4 * r + c]; }

    static Mat4 identity();
    Mat4 adjoint() const;
    cplx trace() const;
    double max_abs() const;
};

Mat4 operator*(const Mat4& x, const Mat4& y);
Mat4 operator+(const Mat4& x, const Mat4& y);
Mat4 operator-(const Mat4& x, const Mat4& y);
Mat4 operator*(cplx s, const Mat4& x);

using Spinor = std::array<cplx, 4>;

Spinor operator*(const Mat4& m, const Spinor& s);

// Dirac basis. sigma_a = i g^b g^c (cyclic), gamma5 = -g0 g1 g2 g3, so that
// sigma_a sigma_b = delta_ab + i eps_abc sigma_c and gamma5^2 = -1.
struct GammaBasis {
    std::array<Mat4, 4> gamma;
    Mat4 gamma5;
    std::array<Mat4, 3> sigma;
    Mat4 pi_projector;
    Vec3 z;

    Mat4 sigma_dot(const Vec3& v) const;
};

GammaBasis build_gamma_basis(const Vec3& z);

struct SpinorParams {
    double A = 1.0;
    double kappa = 0.0;
    double phi = 0.0;
    Vec3 eta;
    Vec3 n{0, 0, 1};
    Vec3 z{0, 0, 1};

    Vec3 xi() const;
};

struct Bilinears {
    double scalar = 0.0;
    Vec4 j;
    Vec4 S;
    double rho = 0.0;
};

void validate(const SpinorParams& p);

// Operator M with psi-matrix = M * Pi.
Mat4 spinor_operator(const SpinorParams& p, const GammaBasis& g);
// Unit vector u with Pi = u u^+ (the nonzero column direction of Pi).
Spinor projector_column(const GammaBasis& g);
Spinor spinor_from_params(const SpinorParams& p, const GammaBasis& g);

Bilinears bilinears_matrix(const Spinor& s, const GammaBasis& g);
Bilinears bilinears_closed_form(const SpinorParams& p);

Vec3 xi_from_bilinears(const Bilinears& b);
// Inverse map: spin pseudovector from flux and xi.
Vec4 spin_from_xi(const Vec4& j, const Vec3& xi);

Vec3 xi_from_n(const Vec3& n, const Vec3& z);
Vec3 n_from_xi(const Vec3& xi, const Vec3& z);

} // namespace disquant
