#include "shapemetric/geom.hpp"

namespace shapemetric {

Mat3 Mat3::rotation2d(double angle) {
    Mat3 r;
    double c = std::cos(angle), s = std::sin(angle);
    r.m = {c, -s, 0, s, c, 0, 0, 0, 1};
    return r;
}

Mat3 Mat3::reflection2d_x() {
    Mat3 r;
    r.m = {1, 0, 0, 0, -1, 0, 0, 0, 1};
    return r;
}

Mat3 Mat3::reflection3d_z() {
    Mat3 r;
    r.m = {1, 0, 0, 0, 1, 0, 0, 0, -1};
    return r;
}

Mat3 Mat3::axis_angle(const Vec& axis, double angle) {
    double len = norm(axis);
    if (len < 1e-300) return Mat3::identity();
    Vec u = vscale(1.0 / len, axis);
    double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    Mat3 r;
    r.m = {c + u[0] * u[0] * t,        u[0] * u[1] * t - u[2] * s, u[0] * u[2] * t + u[1] * s,
           u[1] * u[0] * t + u[2] * s, c + u[1] * u[1] * t,        u[1] * u[2] * t - u[0] * s,
           u[2] * u[0] * t - u[1] * s, u[2] * u[1] * t + u[0] * s, c + u[2] * u[2] * t};
    return r;
}

Mat3 Mat3::from_quaternion(double w, double x, double y, double z) {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n; x /= n; y /= n; z /= n;
    Mat3 r;
    r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - z * w),     2 * (x * z + y * w),
           2 * (x * y + z * w),     1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
           2 * (x * z - y * w),     2 * (y * z + x * w),     1 - 2 * (x * x + y * y)};
    return r;
}

double det3(const Mat3& a) {
    const auto& m = a.m;
    return m[0] * (m[4] * m[8] - m[5] * m[7])
         - m[1] * (m[3] * m[8] - m[5] * m[6])
         + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

bool is_orthogonal(const Mat3& a, double tol) {
    Mat3 p = a.mul(a.transposed());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double want = (i == j) ? 1.0 : 0.0;
            if (std::fabs(p.m[3 * i + j] - want) > tol) return false;
        }
    return true;
}

}  // namespace shapemetric
