#include "elasym/poly.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace elasym {

namespace {
constexpr int kMaxFact = 25;
const std::array<double, kMaxFact>& factorials() {
    static const auto table = [] {
        std::array<double, kMaxFact> f{};
        f[0] = 1.0;
        for (int i = 1; i < kMaxFact; ++i) f[i] = f[i - 1] * i;
        return f;
    }();
    return table;
}
} // namespace

int mono_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

int mono_index(int degree, int beta, int gamma) {
    // monomials enumerated gamma-major, beta within
    return gamma * (degree + 1) - gamma * (gamma - 1) / 2 + beta;
}

long long multinomial(int n, int a, int b, int g) {
    if (a < 0 || b < 0 || g < 0 || a + b + g != n) throw std::invalid_argument("multinomial: bad exponents");
    return static_cast<long long>(factorials()[n] / (factorials()[a] * factorials()[b] * factorials()[g]) + 0.5);
}

double Poly::coeff(int a, int b, int g) const {
    if (a + b + g != degree) throw std::invalid_argument("Poly::coeff: exponent degree mismatch");
    return c[mono_index(degree, b, g)];
}

void Poly::set_coeff(int a, int b, int g, double v) {
    if (a + b + g != degree) throw std::invalid_argument("Poly::set_coeff: exponent degree mismatch");
    c[mono_index(degree, b, g)] = v;
}

Poly operator+(const Poly& p, const Poly& q) {
    if (p.degree != q.degree) throw std::invalid_argument("Poly: degree mismatch in +");
    Poly r = p;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += q.c[i];
    return r;
}

Poly operator-(const Poly& p, const Poly& q) {
    if (p.degree != q.degree) throw std::invalid_argument("Poly: degree mismatch in -");
    Poly r = p;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= q.c[i];
    return r;
}

Poly operator*(double s, const Poly& p) {
    Poly r = p;
    for (double& v : r.c) v *= s;
    return r;
}

Poly mul(const Poly& p, const Poly& q) {
    Poly r(p.degree + q.degree);
    for (int gp = 0; gp <= p.degree; ++gp)
        for (int bp = 0; bp + gp <= p.degree; ++bp) {
            double cp = p.c[mono_index(p.degree, bp, gp)];
            if (cp == 0.0) continue;
            for (int gq = 0; gq <= q.degree; ++gq)
                for (int bq = 0; bq + gq <= q.degree; ++bq) {
                    double cq = q.c[mono_index(q.degree, bq, gq)];
                    if (cq == 0.0) continue;
                    r.c[mono_index(r.degree, bp + bq, gp + gq)] += cp * cq;
                }
        }
    return r;
}

Poly diff(const Poly& p, int axis) {
    if (p.degree == 0) return Poly(0);
    Poly r(p.degree - 1);
    for (int g = 0; g <= r.degree; ++g)
        for (int b = 0; b + g <= r.degree; ++b) {
            int a = r.degree - b - g;
            double v = 0.0;
            switch (axis) {
                case 0: v = (a + 1) * p.coeff(a + 1, b, g); break;
                case 1: v = (b + 1) * p.coeff(a, b + 1, g); break;
                case 2: v = (g + 1) * p.coeff(a, b, g + 1); break;
                default: throw std::invalid_argument("diff: axis out of range");
            }
            r.c[mono_index(r.degree, b, g)] = v;
        }
    return r;
}

Poly laplacian(const Poly& p) {
    if (p.degree < 2) return Poly(0);
    Poly r(p.degree - 2);
    for (int g = 0; g <= r.degree; ++g)
        for (int b = 0; b + g <= r.degree; ++b) {
            int a = r.degree - b - g;
            double v = (a + 2.0) * (a + 1.0) * p.coeff(a + 2, b, g)
                     + (b + 2.0) * (b + 1.0) * p.coeff(a, b + 2, g)
                     + (g + 2.0) * (g + 1.0) * p.coeff(a, b, g + 2);
            r.c[mono_index(r.degree, b, g)] = v;
        }
    return r;
}

double eval(const Poly& p, double x, double y, double z) {
    double s = 0.0;
    for (int g = 0; g <= p.degree; ++g)
        for (int b = 0; b + g <= p.degree; ++b) {
            int a = p.degree - b - g;
            double v = p.c[mono_index(p.degree, b, g)];
            if (v == 0.0) continue;
            s += v * std::pow(x, a) * std::pow(y, b) * std::pow(z, g);
        }
    return s;
}

double norm(const Poly& p) {
    double s = 0.0;
    for (double v : p.c) s += v * v;
    return std::sqrt(s);
}

} // namespace elasym
