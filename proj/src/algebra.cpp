#include "disquant/algebra.hpp"

#include <cmath>
#include <string>

#include "disquant/error.hpp"

namespace disquant {

namespace {

constexpr cplx I{0.0, 1.0};

void require_unit(const Vec3& v, const char* name)
{
    if (std::fabs(norm(v) - 1.0) > 1e-12)
        throw Error(ErrorKind::Domain, std::string(name) + " must be a unit vector");
}

} // namespace

Mat4 Mat4::identity()
{
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4 Mat4::adjoint() const
{
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
}

cplx Mat4::trace() const { return a[0] + a[5] + a[10] + a[15]; }

double Mat4::max_abs() const
{
    double m = 0;
    for (const auto& v : a) m = std::fmax(m, std::abs(v));
    return m;
}

Mat4 operator*(const Mat4& x, const Mat4& y)
{
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += x(r, k) * y(k, c);
            m(r, c) = s;
        }
    return m;
}

Mat4 operator+(const Mat4& x, const Mat4& y)
{
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
}

Mat4 operator-(const Mat4& x, const Mat4& y)
{
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
}

Mat4 operator*(cplx s, const Mat4& x)
{
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = s * x.a[i];
    return m;
}

Spinor operator*(const Mat4& m, const Spinor& s)
{
    Spinor r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r[i] += m(i, k) * s[k];
    return r;
}

Mat4 GammaBasis::sigma_dot(const Vec3& v) const
{
    return cplx(v[0]) * sigma[0] + cplx(v[1]) * sigma[1] + cplx(v[2]) * sigma[2];
}

GammaBasis build_gamma_basis(const Vec3& z)
{
    require_unit(z, "z");
    // Pauli matrices
    const std::array<std::array<cplx, 4>, 3> pauli = {{
        {0.0, 1.0, 1.0, 0.0},
        {0.0, -I, I, 0.0},
        {1.0, 0.0, 0.0, -1.0},
    }};

    GammaBasis g;
    g.z = z;
    g.gamma[0] = Mat4::identity();
    g.gamma[0](2, 2) = g.gamma[0](3, 3) = -1.0;
    for (int a = 0; a < 3; ++a) {
        Mat4 m;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                m(r, c + 2) = pauli[a][2 * r + c];
                m(r + 2, c) = -pauli[a][2 * r + c];
            }
        g.gamma[a + 1] = m;
    }
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, c = (a + 2) % 3;
        g.sigma[a] = I * (g.gamma[b + 1] * g.gamma[c + 1]);
    }
    g.gamma5 = cplx(-1.0) * (g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3]);
    Mat4 one = Mat4::identity();
    g.pi_projector = cplx(0.25) * ((one + g.gamma[0]) * (one + g.sigma_dot(z)));
    return g;
}

Vec3 SpinorParams::xi() const { return xi_from_n(n, z); }

void validate(const SpinorParams& p)
{
    if (!(p.A >= 0.0)) throw Error(ErrorKind::Domain, "amplitude A must be nonnegative");
    require_unit(p.n, "n");
    require_unit(p.z, "z");
}

Mat4 spinor_operator(const SpinorParams& p, const GammaBasis& g)
{
    validate(p);
    const Mat4 one = Mat4::identity();
    // exp(i phi + gamma5 kappa/2), gamma5^2 = -1
    Mat4 m1 = std::exp(I * p.phi) * (cplx(std::cos(0.5 * p.kappa)) * one + cplx(std::sin(0.5 * p.kappa)) * g.gamma5);
    // exp(-(i/2) gamma5 sigma.eta), (i gamma5 sigma.v)^2 = 1
    double eta = norm(p.eta);
    double sh = eta > 0.0 ? std::sinh(0.5 * eta) / eta : 0.5;
    Mat4 m2 = cplx(std::cosh(0.5 * eta)) * one - (I * sh) * (g.gamma5 * g.sigma_dot(p.eta));
    // exp(i pi/2 sigma.n) = i sigma.n
    Mat4 m3 = I * g.sigma_dot(p.n);
    return cplx(p.A) * (m1 * m2 * m3);
}

Spinor projector_column(const GammaBasis& g)
{
    int best = 0;
    double best_norm = -1.0;
    for (int c = 0; c < 4; ++c) {
        double s = 0;
        for (int r = 0; r < 4; ++r) s += std::norm(g.pi_projector(r, c));
        if (s > best_norm) {
            best_norm = s;
            best = c;
        }
    }
    Spinor u;
    double inv = 1.0 / std::sqrt(best_norm);
    for (int r = 0; r < 4; ++r) u[r] = g.pi_projector(r, best) * inv;
    return u;
}

Spinor spinor_from_params(const SpinorParams& p, const GammaBasis& g)
{
    return spinor_operator(p, g) * projector_column(g);
}

Bilinears bilinears_matrix(const Spinor& s, const GammaBasis& g)
{
    // psibar M psi = psi^+ gamma0 M psi
    auto bil = [&](const Mat4& m) {
        Spinor t = (g.gamma[0] * m) * s;
        cplx r = 0;
        for (int i = 0; i < 4; ++i) r += std::conj(s[i]) * t[i];
        return r;
    };
    double scale = 0;
    for (const auto& c : s) scale += std::norm(c);
    double tol = 1e-8 * std::fmax(1.0, scale);

    auto real_of = [&](cplx v, const char* what) {
        if (std::fabs(v.imag()) > tol)
            throw Error(ErrorKind::NumericConsistency, std::string("imaginary part in bilinear ") + what);
        return v.real();
    };

    Bilinears b;
    b.scalar = real_of(bil(Mat4::identity()), "scalar");
    for (int l = 0; l < 4; ++l) {
        b.j[l] = real_of(bil(g.gamma[l]), "j");
        b.S[l] = real_of(I * bil(g.gamma5 * g.gamma[l]), "S");
    }
    double jj = mdot(b.j, b.j);
    b.rho = jj > 0 ? std::sqrt(jj) : 0.0;
    return b;
}

Bilinears bilinears_closed_form(const SpinorParams& p)
{
    const double A2 = p.A * p.A;
    const double eta = norm(p.eta);
    const Vec3 xi = p.xi();
    Bilinears b;
    b.scalar = A2 * std::cos(p.kappa);
    b.rho = A2;
    const double ch = std::cosh(eta);
    b.j[0] = A2 * ch;
    b.S[0] = 0.0;
    Vec3 js, ss = xi;
    if (eta > 0.0) {
        Vec3 v = p.eta / eta;
        js = std::sinh(eta) * v;
        b.S[0] = A2 * std::sinh(eta) * dot(xi, v);
        ss = xi + (ch - 1.0) * dot(v, xi) * v;
    }
    for (int a = 0; a < 3; ++a) {
        b.j[a + 1] = A2 * js[a];
        b.S[a + 1] = A2 * ss[a];
    }
    return b;
}

Vec3 xi_from_bilinears(const Bilinears& b)
{
    double jj = mdot(b.j, b.j);
    if (!(jj > 1e-24) || b.j[0] <= 0.0) throw Error(ErrorKind::LightlikeFlux, "flux is not timelike");
    double rho = std::sqrt(jj);
    double k = b.S[0] / (b.j[0] + rho);
    return Vec3{b.S[1] - b.j[1] * k, b.S[2] - b.j[2] * k, b.S[3] - b.j[3] * k} / rho;
}

Vec4 spin_from_xi(const Vec4& j, const Vec3& xi)
{
    double jj = mdot(j, j);
    if (!(jj > 1e-24) || j[0] <= 0.0) throw Error(ErrorKind::LightlikeFlux, "flux is not timelike");
    double rho = std::sqrt(jj);
    double jx = dot(j.spatial(), xi);
    Vec3 s = rho * xi + (jx / (rho + j[0])) * j.spatial();
    return {jx, s};
}

Vec3 xi_from_n(const Vec3& n, const Vec3& z) { return 2.0 * dot(n, z) * n - z; }

Vec3 n_from_xi(const Vec3& xi, const Vec3& z)
{
    double d = 1.0 + dot(xi, z);
    if (d < 1e-9) throw Error(ErrorKind::Antipodal, "1+xi.z vanishes (xi antipodal to z)");
    return (xi + z) / std::sqrt(2.0 * d);
}

} // namespace disquant
