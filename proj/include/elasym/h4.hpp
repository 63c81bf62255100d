#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "elasym/tensor.hpp"

namespace elasym {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

// Generic Kelvin parametrization of a fourth-order harmonic tensor. The
// associated 6x6 Kelvin matrix has blocks (A, sqrt2 B; sqrt2 B^t, 2C).
struct Harm4Params {
    double L1 = 0, L2 = 0, L3 = 0;
    double X1 = 0, X2 = 0;
    double Y1 = 0, Y2 = 0;
    double Z1 = 0, Z2 = 0;

    SymTensor tensor() const;        // order-4 harmonic tensor
    Matrix6d kelvin() const;         // Kelvin 6x6 view of the same tensor
    static Harm4Params from_tensor(const SymTensor& h, double tol = 1e-10);
};

// d2 = tr13 H^2, d3 = tr13 H^3, c_k = H^{k-2} : d2 (k = 3, 4, 5).
Eigen::Matrix3d d2(const HarmTensor& H);
Eigen::Matrix3d d3(const HarmTensor& H);
Eigen::Matrix3d ck(const HarmTensor& H, int k);

// H <2> a for order-4 H and a symmetric second-order a.
Eigen::Matrix3d contract22(const SymTensor& h4, const Eigen::Matrix3d& a);

struct BoehlerSet {
    // d[k-2] holds d_k for k = 2..10; J[k-2] = tr d_k.
    std::array<Eigen::Matrix3d, 9> d;
    std::array<double, 9> J;

    const Eigen::Matrix3d& dk(int k) const { return d.at(k - 2); }
    double Jk(int k) const { return J.at(k - 2); }
};

BoehlerSet boehler(const HarmTensor& H);

// Degree-6 relation satisfied by every fourth-order harmonic tensor;
// returns 240 J6 + 39 J2^3 + 190 J3^2 - 198 J2 J4 - 540 tr(d3^2).
double boehler_degree6_residual(const HarmTensor& H);

struct CovariantBasisEntry {
    std::string id;
    int degree = 0;
    int order = 0;
    SymTensor value;
};

// The minimal covariant basis of Cov(H^4): 70 entries (including the
// degree-0 metric q), evaluated on H.
std::vector<CovariantBasisEntry> eval_basis(const HarmTensor& H);

// (degree, order) -> multiplicity census of the basis layout.
std::vector<std::array<int, 3>> basis_census();

// Numerical dimensions of the evaluated covariant spaces of order 1 and 2.
// Rank threshold: singular values below tol * sigma_max count as zero;
// H is normalized to unit Frobenius norm first.
std::pair<int, int> cov_space_dims(const HarmTensor& H, double tol = 1e-7);

} // namespace elasym
