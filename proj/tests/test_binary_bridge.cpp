#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "elasym/binary_form.hpp"
#include "elasym/random.hpp"
#include "elasym/rotation.hpp"
#include "elasym/tensor.hpp"

using namespace elasym;
using C = std::complex<double>;

namespace {

double fact(int n) { double f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; }
double binom(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

BinaryForm linear_power(C alpha, C beta, int m) {
    BinaryForm f(m);
    for (int k = 0; k <= m; ++k)
        f.a[k] = binom(m, k) * std::pow(alpha, m - k) * std::pow(beta, k);
    return f;
}

BinaryForm random_form(std::mt19937_64& rng, int degree) {
    std::normal_distribution<double> gauss;
    BinaryForm f(degree);
    for (auto& c : f.a) c = C(gauss(rng), gauss(rng));
    return f;
}

// Decompose f into n+1 powers (u + t_j v)^n (Vandermonde solve), then apply
// the closed-form power identity and bilinearity. Independent of the
// derivative formula used by the implementation.
BinaryForm transvectant_power_oracle(const BinaryForm& f, const BinaryForm& g, int r) {
    auto decompose = [](const BinaryForm& h) {
        int n = h.degree;
        Eigen::MatrixXcd m(n + 1, n + 1);
        Eigen::VectorXcd rhs(n + 1);
        std::vector<C> ts;
        for (int j = 0; j <= n; ++j) {
            double ang = 2.0 * M_PI * j / (n + 1);
            ts.push_back(C(std::cos(ang), std::sin(ang))); // Fourier nodes: well conditioned
        }
        for (int k = 0; k <= n; ++k) {
            rhs(k) = h.a[k];
            for (int j = 0; j <= n; ++j) m(k, j) = binom(n, k) * std::pow(ts[j], k);
        }
        Eigen::VectorXcd c = m.fullPivLu().solve(rhs);
        return std::pair{ts, c};
    };
    auto [tf, cf] = decompose(f);
    auto [tg, cg] = decompose(g);
    int n = f.degree, p = g.degree;
    BinaryForm out(n + p - 2 * r);
    for (size_t j = 0; j < tf.size(); ++j)
        for (size_t k = 0; k < tg.size(); ++k) {
            // (a b) = t_k - t_j for a = (1, t_j), b = (1, t_k)
            C weight = cf(j) * cg(k) * std::pow(tg[k] - tf[j], r);
            out = out + weight * mul(linear_power(1.0, tf[j], n - r), linear_power(1.0, tg[k], p - r));
        }
    return out;
}

Eigen::Matrix2cd random_sl2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    C a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng)), c(gauss(rng), gauss(rng));
    while (std::abs(a) < 0.3) a += C(1.0, 0.0);
    C d = (1.0 + b * c) / a;
    Eigen::Matrix2cd g;
    g << a, b, c, d;
    return g;
}

} // namespace

TEST_CASE("transvectant of monomial powers") {
    // <(a xi)^2, (b xi)^2>_1 with a = (1,0), b = (0,1) is uv
    BinaryForm f = linear_power(1.0, 0.0, 2);
    BinaryForm g = linear_power(0.0, 1.0, 2);
    BinaryForm t = transvectant(f, g, 1);
    CHECK(std::abs(t.a[1] - C(1.0)) < 1e-14);
    CHECK(std::abs(t.a[0]) < 1e-14);
    CHECK(std::abs(t.a[2]) < 1e-14);

    std::mt19937_64 rng(81);
    std::normal_distribution<double> gauss;
    for (auto [n, p, r] : {std::array{3, 2, 1}, std::array{4, 4, 2}, std::array{5, 3, 3}}) {
        C a1(gauss(rng), gauss(rng)), a2(gauss(rng), gauss(rng));
        C b1(gauss(rng), gauss(rng)), b2(gauss(rng), gauss(rng));
        BinaryForm lhs = transvectant(linear_power(a1, a2, n), linear_power(b1, b2, p), r);
        C ab = a1 * b2 - a2 * b1;
        BinaryForm rhs = std::pow(ab, r) * mul(linear_power(a1, a2, n - r), linear_power(b1, b2, p - r));
        CHECK(norm(lhs - rhs) <= 1e-12 * std::max(1.0, norm(rhs)));
    }
}

TEST_CASE("odd transvectant of a form with itself vanishes") {
    std::mt19937_64 rng(82);
    BinaryForm f = random_form(rng, 6);
    CHECK(norm(transvectant(f, f, 1)) <= 1e-13 * norm(f) * norm(f));
    CHECK(norm(transvectant(f, f, 3)) <= 1e-13 * norm(f) * norm(f));
}

TEST_CASE("transvectant vanishes beyond the degrees") {
    std::mt19937_64 rng(83);
    BinaryForm f = random_form(rng, 2), g = random_form(rng, 4);
    CHECK(norm(transvectant(f, g, 3)) == 0.0);
}

TEST_CASE("degree-8 transvectant matches the power-decomposition oracle") {
    std::mt19937_64 rng(84);
    BinaryForm f = random_form(rng, 8), g = random_form(rng, 8);
    BinaryForm got = transvectant(f, g, 2);
    BinaryForm want = transvectant_power_oracle(f, g, 2);
    CHECK(norm(got - want) <= 1e-8 * std::max(1.0, norm(want)));
}

TEST_CASE("transvectant is SL(2,C)-equivariant") {
    std::mt19937_64 rng(85);
    for (int rep = 0; rep < 10; ++rep) {
        Eigen::Matrix2cd g = random_sl2(rng);
        BinaryForm f1 = random_form(rng, 4), f2 = random_form(rng, 6);
        for (int r : {0, 1, 2, 3}) {
            BinaryForm lhs = transvectant(act(g, f1), act(g, f2), r);
            BinaryForm rhs = act(g, transvectant(f1, f2, r));
            CHECK(norm(lhs - rhs) <= 1e-9 * std::max(1.0, norm(rhs)));
        }
    }
}

TEST_CASE("group action composes") {
    std::mt19937_64 rng(86);
    Eigen::Matrix2cd g1 = random_sl2(rng), g2 = random_sl2(rng);
    BinaryForm f = random_form(rng, 5);
    BinaryForm lhs = act(g1 * g2, f);
    BinaryForm rhs = act(g1, act(g2, f));
    CHECK(norm(lhs - rhs) <= 1e-10 * std::max(1.0, norm(rhs)));
}

TEST_CASE("Cartan pullback basics") {
    // the radial polynomial dies on the Cartan cone
    CHECK(norm(cartan_pullback_poly(to_poly(SymTensor::metric()))) < 1e-15);

    // z pulls back to i uv
    BinaryForm z = cartan_pullback(HarmTensor{SymTensor::basis_vector(2)});
    CHECK(std::abs(z.a[1] - C(0, 1)) < 1e-15);
    CHECK(std::abs(z.a[0]) + std::abs(z.a[2]) < 1e-15);

    // non-harmonic input is rejected
    CHECK_THROWS_AS(cartan_pullback(HarmTensor{sym_product(SymTensor::metric(), SymTensor::metric())}),
                    std::invalid_argument);
}

TEST_CASE("pullbacks of real harmonics satisfy the real-form condition") {
    std::mt19937_64 rng(87);
    for (int order = 1; order <= 4; ++order)
        for (int rep = 0; rep < 10; ++rep) {
            SymTensor h = harmonic_part(random_sym_tensor(rng, order));
            CHECK(is_real_form(cartan_pullback(HarmTensor{h}), 1e-12));
        }
}

TEST_CASE("pullback intertwines SO(3) and SU(2) actions") {
    std::mt19937_64 rng(88);
    std::normal_distribution<double> gauss;
    for (int rep = 0; rep < 10; ++rep) {
        double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
        Rotation g = Rotation::from_quaternion(w, x, y, z);
        Eigen::Matrix2cd gamma = su2_from_quaternion(w, x, y, z);
        SymTensor h = harmonic_part(random_sym_tensor(rng, 4));
        BinaryForm lhs = cartan_pullback(HarmTensor{rotate(g, h)});
        BinaryForm rhs = act(gamma, cartan_pullback(HarmTensor{h}));
        CHECK(norm(lhs - rhs) <= 1e-10 * std::max(1.0, norm(rhs)));
    }
}

TEST_CASE("kappa values") {
    Rational k = kappa(4, 4, 1);
    CHECK(k.num == 7);
    CHECK(k.den == 12);
    k = kappa(1, 1, 0);
    CHECK(k.num == 1);
    CHECK(k.den == 2);
    for (auto [n, p] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 4}}) {
        Rational k0 = kappa(n, p, 0);
        CHECK(k0.num == 1);
        CHECK(k0.den == 2);
    }
    CHECK_THROWS_AS(kappa(2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(kappa(1, 1, 1), std::invalid_argument);
}

TEST_CASE("discriminant vanishes on perfect squares") {
    std::mt19937_64 rng(89);
    std::normal_distribution<double> gauss;
    for (int rep = 0; rep < 10; ++rep) {
        C e1(gauss(rng), gauss(rng)), e2(gauss(rng), gauss(rng));
        // (e1 v - e2 u)^2
        BinaryForm w(2);
        w.a[0] = e2 * e2;
        w.a[1] = -2.0 * e1 * e2;
        w.a[2] = e1 * e1;
        CHECK(std::abs(s2_discriminant(w)) < 1e-13 * (1 + norm(w)));
    }
}

TEST_CASE("translation identities: zero input, random pairs, full grid") {
    TranslationResidual z = verify_translation(HarmTensor{SymTensor(4)}, HarmTensor{SymTensor(4)}, 1);
    CHECK(z.even == 0.0);
    CHECK(z.odd == 0.0);

    std::mt19937_64 rng(90);
    for (int rep = 0; rep < 5; ++rep) {
        for (int n : {2, 4})
            for (int p : {2, 4}) {
                HarmTensor h1{harmonic_part(random_sym_tensor(rng, n))};
                HarmTensor h2{harmonic_part(random_sym_tensor(rng, p))};
                for (int r = 0; r <= std::min(n, p); ++r) {
                    TranslationResidual res = verify_translation(h1, h2, r);
                    CHECK(res.even < 1e-9);
                    if (res.odd_checked) CHECK(res.odd < 1e-9);
                }
            }
    }
}
