#pragma once

#include <vector>

namespace elasym {

// Shared monomial enumeration for homogeneous polynomials of degree n in
// (x, y, z) and for multisets of symmetric-tensor indices: a monomial
// x^a y^b z^g with a+b+g = n is stored at mono_index(n, b, g).

int mono_count(int degree);                      // (n+1)(n+2)/2
int mono_index(int degree, int beta, int gamma); // alpha = degree - beta - gamma
long long multinomial(int n, int a, int b, int g);

// Dense coefficient vector of a homogeneous polynomial of fixed degree.
struct Poly {
    int degree = 0;
    std::vector<double> c; // c[mono_index(degree, b, g)] = coeff of x^a y^b z^g

    Poly() : c(1, 0.0) {}
    explicit Poly(int deg) : degree(deg), c(mono_count(deg), 0.0) {}

    double coeff(int a, int b, int g) const;
    void set_coeff(int a, int b, int g, double v);
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator-(const Poly& p, const Poly& q);
Poly operator*(double s, const Poly& p);

Poly mul(const Poly& p, const Poly& q);
Poly diff(const Poly& p, int axis);      // axis 0,1,2 -> d/dx, d/dy, d/dz
Poly laplacian(const Poly& p);
double eval(const Poly& p, double x, double y, double z);
double norm(const Poly& p);              // Euclidean norm of the coefficients

} // namespace elasym
