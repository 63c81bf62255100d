#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <vector>

#include "elasym/poly.hpp"
#include "elasym/rotation.hpp"

namespace elasym {

// General (not necessarily symmetric) order-n tensor on R^3, stored densely
// with 3^n entries. The first index is the least significant base-3 digit of
// the flat position. Used for intermediates whose full index symmetry is not
// yet established (tensor products, r-contractions, powers H:H, ...).
struct DenseTensor {
    int order = 0;
    std::vector<double> a; // size 3^order

    DenseTensor() : a(1, 0.0) {}
    explicit DenseTensor(int ord);

    double& at(std::initializer_list<int> axes);
    double at(std::initializer_list<int> axes) const;
};

// Totally symmetric order-n tensor, stored compactly: one coefficient per
// index multiset (alpha ones, beta twos, gamma threes), alpha+beta+gamma = n.
// Dual polynomial view: the coefficient of x^a y^b z^g in the associated
// homogeneous polynomial S(x,...,x) is multinomial(n;a,b,g) * component(a,b,g).
class SymTensor {
public:
    SymTensor() : order_(0), c_(1, 0.0) {}
    explicit SymTensor(int order);

    static SymTensor metric();              // q = (delta_ij), order 2
    static SymTensor basis_vector(int axis); // e_axis, order 1
    static SymTensor scalar(double v);

    int order() const { return order_; }
    int size() const { return static_cast<int>(c_.size()); }

    double& at(int alpha, int beta, int gamma);
    double at(int alpha, int beta, int gamma) const;

    // Component by explicit index tuple, axes in {0,1,2}.
    double component(std::initializer_list<int> axes) const;
    void set_component(std::initializer_list<int> axes, double v);

    std::vector<double>& raw() { return c_; }
    const std::vector<double>& raw() const { return c_; }

    SymTensor& operator+=(const SymTensor& o);
    SymTensor& operator-=(const SymTensor& o);
    SymTensor& operator*=(double s);

private:
    int order_;
    std::vector<double> c_;
};

SymTensor operator+(SymTensor a, const SymTensor& b);
SymTensor operator-(SymTensor a, const SymTensor& b);
SymTensor operator*(double s, SymTensor a);

// Frobenius inner product / norm of the *expanded* tensor
// (multiplicity-weighted sums over the compact storage).
double dot(const SymTensor& a, const SymTensor& b);
double norm(const SymTensor& a);
double norm(const DenseTensor& t);

DenseTensor expand(const SymTensor& s);
// Average of a dense tensor over all index permutations.
SymTensor symmetrize(const DenseTensor& t);
// Cheap re-interpretation for tensors already known to be symmetric.
SymTensor compact_symmetric(const DenseTensor& t);

// r-fold index contraction (last r indices of t1 against first r of t2),
// no symmetrization. For r = order(t1) = order(t2) this is the Frobenius
// scalar product.
DenseTensor contract(const DenseTensor& t1, const DenseTensor& t2, int r);
SymTensor sym_contract(const SymTensor& s1, const SymTensor& s2, int r);

// Symmetric tensor product (polynomial product in the dual view).
SymTensor sym_product(const SymTensor& s1, const SymTensor& s2);

// Generalized cross product: (eps_{i j k} S1_{j ...} S2_{k ...})^s,
// of order p + q - 1. Reduces to the vector cross product at order 1.
SymTensor cross(const SymTensor& s1, const SymTensor& s2);

SymTensor trace(const SymTensor& s);   // order n-2; requires n >= 2
SymTensor deviator(const SymTensor& a); // order 2 only

Poly to_poly(const SymTensor& s);
SymTensor from_poly(const Poly& p);

bool is_harmonic(const SymTensor& s, double tol = 1e-10);

// S = H0 + q (.) H1 + ... + q^{(.)r} (.) Hr with Hk harmonic of order n-2k.
std::vector<SymTensor> harmonic_decompose(const SymTensor& s);
SymTensor harmonic_reconstruct(const std::vector<SymTensor>& parts);
SymTensor harmonic_part(const SymTensor& s); // H0

SymTensor rotate(const Rotation& g, const SymTensor& s);
DenseTensor rotate(const Rotation& g, const DenseTensor& t);

// Bridges between low-order SymTensors and Eigen types.
Eigen::Matrix3d to_mat(const SymTensor& a);                // order 2
SymTensor sym2_from_mat(const Eigen::Matrix3d& m);         // symmetrizes m
Eigen::Vector3d to_vec(const SymTensor& v);                // order 1
SymTensor sym1_from_vec(const Eigen::Vector3d& v);

// The alternating symbol eps_{ijk} with eps_{123} = 1.
const DenseTensor& levi_civita();

// eps_{ijk} M_{jk} (kills the symmetric part of M).
Eigen::Vector3d eps_contract(const Eigen::Matrix3d& m);

// Harmonic (traceless symmetric) tensor. Construction validates the trace
// residual against tol * |H|.
class HarmTensor {
public:
    HarmTensor() : t_(4) {}
    explicit HarmTensor(const SymTensor& s, double tol = 1e-10);

    const SymTensor& tensor() const { return t_; }
    operator const SymTensor&() const { return t_; }
    int order() const { return t_.order(); }

private:
    SymTensor t_;
};

} // namespace elasym
