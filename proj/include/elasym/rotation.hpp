#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace elasym {

// Proper rotation of R^3. The constructor rejects matrices that are not
// orthogonal with determinant +1 (residuals above 1e-12).
class Rotation {
public:
    Rotation() : g_(Eigen::Matrix3d::Identity()) {}
    explicit Rotation(const Eigen::Matrix3d& g);

    static Rotation identity() { return Rotation(); }
    static Rotation axis_angle(const Eigen::Vector3d& axis, double angle);
    // Unit quaternion (w, x, y, z); normalized internally.
    static Rotation from_quaternion(double w, double x, double y, double z);

    const Eigen::Matrix3d& matrix() const { return g_; }
    Rotation inverse() const;

    friend Rotation operator*(const Rotation& a, const Rotation& b);

private:
    Eigen::Matrix3d g_;
};

// Haar-uniform rotation, deterministic per seed (unit-quaternion draw).
Rotation random_rotation(std::uint64_t seed);
Rotation random_rotation(std::mt19937_64& rng);

} // namespace elasym
