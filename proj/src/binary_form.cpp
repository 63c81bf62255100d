#include "elasym/binary_form.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace elasym {

namespace {

using C = std::complex<double>;

double fact(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binom(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

// d/du and d/dv on the coefficients of a_k u^{n-k} v^k
BinaryForm du(const BinaryForm& f) {
    if (f.degree == 0) return BinaryForm(0);
    BinaryForm g(f.degree - 1);
    for (int k = 0; k <= g.degree; ++k) g.a[k] = static_cast<double>(f.degree - k) * f.a[k];
    return g;
}

BinaryForm dv(const BinaryForm& f) {
    if (f.degree == 0) return BinaryForm(0);
    BinaryForm g(f.degree - 1);
    for (int k = 0; k <= g.degree; ++k) g.a[k] = static_cast<double>(k + 1) * f.a[k + 1];
    return g;
}

// (alpha u + beta v)^m
BinaryForm linear_power(const C& alpha, const C& beta, int m) {
    BinaryForm f(m);
    for (int k = 0; k <= m; ++k)
        f.a[k] = binom(m, k) * std::pow(alpha, m - k) * std::pow(beta, k);
    return f;
}

} // namespace

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree != g.degree) throw std::invalid_argument("BinaryForm: degree mismatch in +");
    BinaryForm r = f;
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += g.a[k];
    return r;
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree != g.degree) throw std::invalid_argument("BinaryForm: degree mismatch in -");
    BinaryForm r = f;
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= g.a[k];
    return r;
}

BinaryForm operator*(const C& s, const BinaryForm& f) {
    BinaryForm r = f;
    for (auto& c : r.a) c *= s;
    return r;
}

BinaryForm mul(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm r(f.degree + g.degree);
    for (int i = 0; i <= f.degree; ++i) {
        if (f.a[i] == 0.0) continue;
        for (int j = 0; j <= g.degree; ++j) r.a[i + j] += f.a[i] * g.a[j];
    }
    return r;
}

double norm(const BinaryForm& f) {
    double s = 0;
    for (const auto& c : f.a) s += std::norm(c);
    return std::sqrt(s);
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r) {
    if (r < 0) throw std::invalid_argument("transvectant: negative index");
    int n = f.degree, p = g.degree;
    if (r > std::min(n, p)) return BinaryForm(std::max(n + p - 2 * r, 0));
    double pref = (fact(n - r) / fact(n)) * (fact(p - r) / fact(p));
    BinaryForm acc(n + p - 2 * r);
    for (int i = 0; i <= r; ++i) {
        BinaryForm df = f, dg = g;
        for (int s = 0; s < r - i; ++s) df = du(df);
        for (int s = 0; s < i; ++s) df = dv(df);
        for (int s = 0; s < i; ++s) dg = du(dg);
        for (int s = 0; s < r - i; ++s) dg = dv(dg);
        double w = ((i % 2) ? -1.0 : 1.0) * binom(r, i);
        acc = acc + w * mul(df, dg);
    }
    return pref * acc;
}

BinaryForm act(const Eigen::Matrix2cd& gamma, const BinaryForm& f) {
    C a = gamma(0, 0), b = gamma(0, 1), c = gamma(1, 0), d = gamma(1, 1);
    C det = a * d - b * c;
    if (std::abs(det - 1.0) > 1e-9)
        throw std::invalid_argument("act: gamma must have determinant 1");
    // gamma^{-1} (u, v) = (d u - b v, -c u + a v)
    BinaryForm out(f.degree);
    for (int k = 0; k <= f.degree; ++k) {
        if (f.a[k] == 0.0) continue;
        BinaryForm term = mul(linear_power(d, -b, f.degree - k), linear_power(-c, a, k));
        out = out + f.a[k] * term;
    }
    return out;
}

BinaryForm cartan_pullback_poly(const Poly& p) {
    static const BinaryForm X = [] {
        BinaryForm f(2);
        f.a[0] = 0.5;
        f.a[2] = 0.5;
        return f;
    }();
    static const BinaryForm Y = [] {
        BinaryForm f(2);
        f.a[0] = C(0, -0.5);
        f.a[2] = C(0, 0.5);
        return f;
    }();
    static const BinaryForm Z = [] {
        BinaryForm f(2);
        f.a[1] = C(0, 1);
        return f;
    }();
    BinaryForm out(2 * p.degree);
    for (int g = 0; g <= p.degree; ++g)
        for (int b = 0; b + g <= p.degree; ++b) {
            int a = p.degree - b - g;
            double coeff = p.c[mono_index(p.degree, b, g)];
            if (coeff == 0.0) continue;
            BinaryForm term(0);
            term.a[0] = coeff;
            for (int i = 0; i < a; ++i) term = mul(term, X);
            for (int i = 0; i < b; ++i) term = mul(term, Y);
            for (int i = 0; i < g; ++i) term = mul(term, Z);
            out = out + term;
        }
    return out;
}

BinaryForm cartan_pullback(const HarmTensor& h) {
    return cartan_pullback_poly(to_poly(h.tensor()));
}

bool is_real_form(const BinaryForm& f, double tol) {
    if (f.degree % 2 != 0) return false;
    double scale = 0;
    for (const auto& c : f.a) scale = std::max(scale, std::abs(c));
    scale = std::max(scale, 1.0);
    int n2 = f.degree;
    for (int k = 0; k <= n2; ++k) {
        C want = ((k % 2) ? -1.0 : 1.0) * std::conj(f.a[k]);
        if (std::abs(f.a[n2 - k] - want) > tol * scale) return false;
    }
    return true;
}

Rational kappa(int n, int p, int r) {
    if (r < 0 || n < r + 1 || p < r + 1)
        throw std::invalid_argument("kappa: requires n, p >= r + 1");
    auto ll_fact = [](int m) {
        long long f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    };
    long long num = ll_fact(n + p - 1) * ll_fact(n - r - 1) * ll_fact(p - r - 1);
    long long den = (1LL << (2 * r + 1)) * ll_fact(n + p - 1 - 2 * r) * ll_fact(n - 1) * ll_fact(p - 1);
    long long g = std::gcd(num, den);
    return {num / g, den / g};
}

Eigen::Matrix2cd su2_from_quaternion(double w, double x, double y, double z) {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n == 0.0) throw std::invalid_argument("su2_from_quaternion: zero quaternion");
    w /= n; x /= n; y /= n; z /= n;
    Eigen::Matrix2cd g;
    g << C(w, z), C(x, y),
         C(-x, y), C(w, -z);
    return g;
}

std::complex<double> s2_discriminant(const BinaryForm& w) {
    if (w.degree != 2) throw std::invalid_argument("s2_discriminant: degree-2 form expected");
    C half_mid = 0.5 * w.a[1];
    return half_mid * half_mid - w.a[0] * w.a[2];
}

namespace {

double fit_factor(const BinaryForm& lhs, const BinaryForm& rhs) {
    double rr = 0, lr = 0;
    for (size_t k = 0; k < rhs.a.size(); ++k) {
        rr += std::norm(rhs.a[k]);
        lr += (std::conj(rhs.a[k]) * lhs.a[k]).real();
    }
    return rr > 0 ? lr / rr : 1.0;
}

} // namespace

TranslationResidual verify_translation(const HarmTensor& h1, const HarmTensor& h2, int r) {
    int n = h1.order(), p = h2.order();
    if (r < 0 || r > std::min(n, p))
        throw std::invalid_argument("verify_translation: r out of range");

    BinaryForm f1 = cartan_pullback(h1);
    BinaryForm f2 = cartan_pullback(h2);
    TranslationResidual res;

    auto rel = [](const BinaryForm& lhs, const BinaryForm& rhs) {
        double scale = std::max({norm(lhs), norm(rhs), 1e-300});
        return norm(lhs - rhs) / scale;
    };

    {
        BinaryForm lhs = transvectant(f1, f2, 2 * r);
        SymTensor contracted = sym_contract(h1.tensor(), h2.tensor(), r);
        BinaryForm rhs = std::pow(2.0, -r) * cartan_pullback_poly(to_poly(harmonic_part(contracted)));
        if (norm(lhs) == 0.0 && norm(rhs) == 0.0) res.even = 0.0;
        else {
            res.even = rel(lhs, rhs);
            res.even_factor = fit_factor(lhs, rhs);
        }
    }

    if (r <= std::min(n, p) - 1) {
        res.odd_checked = true;
        BinaryForm lhs = transvectant(f1, f2, 2 * r + 1);
        SymTensor crossed = cross(h1.tensor(), h2.tensor());
        for (int i = 0; i < r; ++i) crossed = trace(crossed);
        BinaryForm rhs =
            kappa(n, p, r).value() * cartan_pullback_poly(to_poly(harmonic_part(crossed)));
        if (norm(lhs) == 0.0 && norm(rhs) == 0.0) res.odd = 0.0;
        else {
            res.odd = rel(lhs, rhs);
            res.odd_factor = fit_factor(lhs, rhs);
        }
    }
    return res;
}

} // namespace elasym
