#include "elasym/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace elasym {

Rotation::Rotation(const Eigen::Matrix3d& g) : g_(g) {
    double ortho = (g.transpose() * g - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (ortho > 1e-12 || std::abs(g.determinant() - 1.0) > 1e-12)
        throw std::invalid_argument("Rotation: matrix is not a proper rotation");
}

Rotation Rotation::axis_angle(const Eigen::Vector3d& axis, double angle) {
    Eigen::Vector3d n = axis.normalized();
    Eigen::AngleAxisd aa(angle, n);
    Rotation r;
    r.g_ = aa.toRotationMatrix();
    return r;
}

Rotation Rotation::from_quaternion(double w, double x, double y, double z) {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n == 0.0) throw std::invalid_argument("Rotation: zero quaternion");
    w /= n; x /= n; y /= n; z /= n;
    Rotation r;
    r.g_ << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
            2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
            2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return r;
}

Rotation Rotation::inverse() const {
    Rotation r;
    r.g_ = g_.transpose();
    return r;
}

Rotation operator*(const Rotation& a, const Rotation& b) {
    Rotation r;
    r.g_ = a.g_ * b.g_;
    return r;
}

Rotation random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double w, x, y, z, n2;
    do {
        w = gauss(rng); x = gauss(rng); y = gauss(rng); z = gauss(rng);
        n2 = w * w + x * x + y * y + z * z;
    } while (n2 < 1e-12);
    return Rotation::from_quaternion(w, x, y, z);
}

Rotation random_rotation(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_rotation(rng);
}

} // namespace elasym
