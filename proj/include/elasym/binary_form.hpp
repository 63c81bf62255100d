#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "elasym/poly.hpp"
#include "elasym/tensor.hpp"

namespace elasym {

// Binary form of degree n with complex coefficients,
// f(u, v) = a_0 u^n + a_1 u^{n-1} v + ... + a_n v^n.
struct BinaryForm {
    int degree = 0;
    std::vector<std::complex<double>> a;

    BinaryForm() : a(1, 0.0) {}
    explicit BinaryForm(int deg) : degree(deg), a(deg + 1, 0.0) {}
};

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator*(const std::complex<double>& s, const BinaryForm& f);
BinaryForm mul(const BinaryForm& f, const BinaryForm& g);
double norm(const BinaryForm& f);

// Classical transvectant of index r; the zero form when r exceeds either
// degree.
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r);

// (gamma * f)(xi) = f(gamma^{-1} xi) for gamma in SL(2, C).
BinaryForm act(const Eigen::Matrix2cd& gamma, const BinaryForm& f);

// Pullback along the Cartan map x = (u^2+v^2)/2, y = (u^2-v^2)/(2i), z = iuv.
// The guarded overload rejects non-harmonic tensors (the map annihilates the
// radial part, so information would be lost silently).
BinaryForm cartan_pullback(const HarmTensor& h);
BinaryForm cartan_pullback_poly(const Poly& p);

// a_{2n-k} = (-1)^k conj(a_k) characterizes pullbacks of real harmonics.
bool is_real_form(const BinaryForm& f, double tol = 1e-12);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// kappa(n, p, r) relating odd transvectants to iterated traces of the
// generalized cross product; exact rational. Requires n, p >= r + 1.
Rational kappa(int n, int p, int r);

// SU(2) element covering the rotation of unit quaternion (w, x, y, z) in the
// basis that realizes the Cartan map above.
Eigen::Matrix2cd su2_from_quaternion(double w, double x, double y, double z);

// Discriminant of a quadratic binary form w0 u^2 + w1 uv + w2 v^2, in the
// half-middle-coefficient convention that vanishes on perfect squares.
std::complex<double> s2_discriminant(const BinaryForm& w);

struct TranslationResidual {
    double even = 0;        // relative residual of the index-2r identity
    double odd = 0;         // relative residual of the index-(2r+1) identity
    bool odd_checked = false;
    double even_factor = 1; // best-fit scalar LHS ~ factor * RHS
    double odd_factor = 1;
};

// Master cross-check between the transvectant calculus and the tensorial
// operations: index 2r against the symmetrized r-contraction, index 2r+1
// against kappa * tr^r of the generalized cross product.
TranslationResidual verify_translation(const HarmTensor& h1, const HarmTensor& h2, int r);

} // namespace elasym
