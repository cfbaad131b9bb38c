#pragma once

#include <array>
#include <cmath>

namespace shapemetric {

// Points and directions live in R^3; planar bodies use the xy plane
// with the z component fixed to 0. The ambient dimension is carried
// by descriptors and grids, not by the point type.
using Vec = std::array<double, 3>;

inline Vec vadd(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec vsub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec vscale(double s, const Vec& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec cross(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

// Row-major 3x3 matrix. 2D rotations occupy the upper-left block with
// m[8] = 1 so the same type serves both ambient dimensions.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    Vec apply(const Vec& v) const {
        return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
                m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
                m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
    }
    Vec apply_transposed(const Vec& v) const {
        return {m[0] * v[0] + m[3] * v[1] + m[6] * v[2],
                m[1] * v[0] + m[4] * v[1] + m[7] * v[2],
                m[2] * v[0] + m[5] * v[1] + m[8] * v[2]};
    }
    Mat3 transposed() const {
        Mat3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.m[3 * i + j] = m[3 * j + i];
        return t;
    }
    Mat3 mul(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
                r.m[3 * i + j] = s;
            }
        return r;
    }

    static Mat3 identity() { return Mat3{}; }
    static Mat3 rotation2d(double angle);
    static Mat3 reflection2d_x();             // (x,y) -> (x,-y)
    static Mat3 reflection3d_z();             // (x,y,z) -> (x,y,-z)
    static Mat3 axis_angle(const Vec& axis, double angle);
    static Mat3 from_quaternion(double w, double x, double y, double z);
};

double det3(const Mat3& m);
bool is_orthogonal(const Mat3& m, double tol = 1e-12);

}  // namespace shapemetric
