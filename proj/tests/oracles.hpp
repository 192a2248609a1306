#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <functional>

#include "disquant/algebra.hpp"
#include "disquant/covariant.hpp"

namespace oracle {

using disquant::cplx;
using disquant::Mat4;

// Truncated power series of the matrix exponential.
inline Mat4 expm_series(const Mat4& m, int terms = 30)
{
    Mat4 sum = Mat4::identity(), term = Mat4::identity();
    for (int k = 1; k < terms; ++k) {
        term = cplx(1.0 / k) * (term * m);
        sum = sum + term;
    }
    return sum;
}

// psi-matrix built from literal exponentials of the generators.
inline Mat4 spinor_matrix_series(const disquant::SpinorParams& p, const disquant::GammaBasis& g)
{
    const cplx I{0, 1};
    const Mat4 one = Mat4::identity();
    const Mat4 e1 = expm_series(I * p.phi * one + cplx(0.5 * p.kappa) * g.gamma5);
    const Mat4 e2 = expm_series(cplx(0, -0.5) * (g.gamma5 * g.sigma_dot(p.eta)));
    const Mat4 e3 = expm_series(cplx(0, 0.5 * M_PI) * g.sigma_dot(p.n));
    return cplx(p.A) * (e1 * e2 * e3 * g.pi_projector);
}

inline double ulp_rel(double a, double b) { return std::fabs(a - b) / std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b))); }

// Fourth-order central difference of a scalar function.
inline double diff5(const std::function<double(double)>& f, double x, double h)
{
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

} // namespace oracle
