#pragma once

#include <array>
#include <cmath>

namespace disquant {

struct Vec3 {
    std::array<double, 3> c{};
    Vec3() = default;
    Vec3(double x, double y, double z) : c{x, y, z} {}
    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }
};

// Contravariant components, metric diag(+1,-1,-1,-1).
struct Vec4 {
    std::array<double, 4> c{};
    Vec4() = default;
    Vec4(double t, double x, double y, double z) : c{t, x, y, z} {}
    Vec4(double t, const Vec3& s) : c{t, s[0], s[1], s[2]} {}
    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }
    Vec3 spatial() const { return {c[1], c[2], c[3]}; }
};

inline constexpr double metric[4] = {1.0, -1.0, -1.0, -1.0};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3 operator/(const Vec3& a, double s) { return {a[0] / s, a[1] / s, a[2] / s}; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { return a = a + b; }

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }
inline double max_abs(const Vec3& a) { return std::fmax(std::fabs(a[0]), std::fmax(std::fabs(a[1]), std::fabs(a[2]))); }

inline Vec4 operator+(const Vec4& a, const Vec4& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
inline Vec4 operator-(const Vec4& a, const Vec4& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
inline Vec4 operator-(const Vec4& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
inline Vec4 operator*(double s, const Vec4& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }
inline Vec4 operator*(const Vec4& a, double s) { return s * a; }
inline Vec4 operator/(const Vec4& a, double s) { return {a[0] / s, a[1] / s, a[2] / s, a[3] / s}; }
inline Vec4& operator+=(Vec4& a, const Vec4& b) { return a = a + b; }

// Minkowski product a^i b_i.
inline double mdot(const Vec4& a, const Vec4& b) { return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]; }
// Index flip (contravariant <-> covariant).
inline Vec4 flip(const Vec4& a) { return {a[0], -a[1], -a[2], -a[3]}; }
inline double max_abs(const Vec4& a)
{
    double m = 0;
    for (double v : a.c) m = std::fmax(m, std::fabs(v));
    return m;
}

// eps_{iklm} a^i b^k c^l d^m with eps_{0123} = +1: determinant of the rows a, b, c, d.
inline double eps4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d)
{
    auto m3 = [](double a0, double a1, double a2, double b0, double b1, double b2, double c0, double c1, double c2) {
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
    };
    return a[0] * m3(b[1], b[2], b[3], c[1], c[2], c[3], d[1], d[2], d[3])
         - a[1] * m3(b[0], b[2], b[3], c[0], c[2], c[3], d[0], d[2], d[3])
         + a[2] * m3(b[0], b[1], b[3], c[0], c[1], c[3], d[0], d[1], d[3])
         - a[3] * m3(b[0], b[1], b[2], c[0], c[1], c[2], d[0], d[1], d[2]);
}

// Unit basis vector e_k (components delta_k^i).
inline Vec4 basis4(int k)
{
    Vec4 e;
    e[k] = 1.0;
    return e;
}

} // namespace disquant
