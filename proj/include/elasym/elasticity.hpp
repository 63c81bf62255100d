#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "elasym/h4.hpp"
#include "elasym/h4_classify.hpp"
#include "elasym/tensor.hpp"

namespace elasym {

// Fourth-order elasticity tensor with minor and major symmetries, stored as
// the symmetric 6x6 Voigt matrix in the index order (11, 22, 33, 23, 13, 12),
// no shear scale factors. The Kelvin view is P * V * P with
// P = diag(1, 1, 1, sqrt2, sqrt2, sqrt2).
class ElasticityTensor {
public:
    ElasticityTensor() : v_(Matrix6d::Zero()) {}

    // Throws when m deviates from symmetry by more than 1e-12 relative.
    static ElasticityTensor from_voigt(const Matrix6d& m);
    static ElasticityTensor from_kelvin(const Matrix6d& m);
    // Upper triangle of the Voigt matrix, row-major:
    // (11, 12, ..., 16, 22, 23, ..., 66).
    static ElasticityTensor from_components21(const std::array<double, 21>& c);

    const Matrix6d& voigt() const { return v_; }
    Matrix6d kelvin() const;
    std::array<double, 21> components21() const;

    double operator()(int i, int j, int k, int l) const;
    double& voigt_entry(int I, int J);

    // Frobenius norm of the full tensor (equals the Kelvin matrix norm).
    double norm() const;

    ElasticityTensor& operator+=(const ElasticityTensor& o);
    ElasticityTensor& operator-=(const ElasticityTensor& o);
    ElasticityTensor& operator*=(double s);

private:
    Matrix6d v_;
};

ElasticityTensor operator+(ElasticityTensor a, const ElasticityTensor& b);
ElasticityTensor operator-(ElasticityTensor a, const ElasticityTensor& b);
ElasticityTensor operator*(double s, ElasticityTensor a);

ElasticityTensor rotate(const Rotation& g, const ElasticityTensor& e);

// d = tr12 E and v = tr13 E.
Eigen::Matrix3d dilatation(const ElasticityTensor& e);
Eigen::Matrix3d voigt_tensor(const ElasticityTensor& e);

// E = (lambda, mu, a, b, H): two generalized Lame scalars, two second-order
// deviators, one fourth-order harmonic tensor.
struct HarmonicDecomposition {
    double lambda = 0;
    double mu = 0;
    Eigen::Matrix3d a = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d b = Eigen::Matrix3d::Zero();
    SymTensor H = SymTensor(4);

    // deviatoric parts of the dilatation and Voigt tensors; any invertible
    // combination of (a, b) carries the same classification information
    Eigen::Matrix3d dilatation_dev() const { return 3.0 * a + 4.0 * b; }
    Eigen::Matrix3d voigt_dev() const { return 2.0 * a + 5.0 * b; }
};

HarmonicDecomposition decompose(const ElasticityTensor& e);
// Throws when a or b has a trace residual, or H a harmonicity residual,
// above 1e-10 relative.
ElasticityTensor reconstruct(const HarmonicDecomposition& dec);
ElasticityTensor reconstruct(double lambda, double mu, const Eigen::Matrix3d& a,
                             const Eigen::Matrix3d& b, const SymTensor& H);

// Evaluation trace of the classification cascade, for reporting.
struct ClassificationLedger {
    struct Row {
        std::string condition;
        double residual = 0;
        double threshold = 0;
        bool vanishes = false;
    };
    std::vector<Row> rows;
    std::vector<std::pair<std::string, std::string>> families; // family -> class
};

// Symmetry class of the elasticity tensor, through the covariant conditions
// on (d2, a, b, H). Input is normalized to unit Kelvin-Frobenius norm.
H4Class classify_elasticity(const ElasticityTensor& e, double tol = 1e-8,
                            ClassificationLedger* ledger = nullptr);

// Random elasticity tensor of the exact class (normal-form axes, optionally
// conjugated by a random rotation drawn from the same seed).
ElasticityTensor generate_elasticity(H4Class cls, std::uint64_t seed, bool rotated);

// One entry of the invariant integrity basis.
struct InvariantEntry {
    std::string label;
    int deg_h = 0, deg_a = 0, deg_b = 0;
    double value = 0;
};

// The 297-generator integrity basis of the invariant algebra, evaluated on
// the harmonic decomposition of e.
std::vector<InvariantEntry> integrity_basis(const ElasticityTensor& e);
std::vector<InvariantEntry> integrity_basis(const HarmonicDecomposition& dec);

} // namespace elasym
