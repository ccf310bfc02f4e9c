#ifndef QINFO_VEC3_HPP
#define QINFO_VEC3_HPP

#include <algorithm>
#include <array>
#include <cmath>

namespace qinfo {

using Vec3 = std::array<double, 3>;

// Real 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }
    double operator()(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }

    static Mat3 identity() {
        Mat3 out;
        out(0, 0) = out(1, 1) = out(2, 2) = 1.0;
        return out;
    }

    Mat3 transpose() const {
        Mat3 out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out(c, r) = (*this)(r, c);
        return out;
    }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 out{};
    for (int r = 0; r < 3; ++r) out[r] = a(r, 0) * v[0] + a(r, 1) * v[1] + a(r, 2) * v[2];
    return out;
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm_squared(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm_squared(v)); }

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
    double m = 0.0;
    for (size_t k = 0; k < 9; ++k) m = std::max(m, std::abs(a.m[k] - b.m[k]));
    return m;
}

} // namespace qinfo

#endif
