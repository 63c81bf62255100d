#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "elasym/h4.hpp"
#include "elasym/h4_classify.hpp"
#include "elasym/random.hpp"
#include "elasym/tensor.hpp"

using namespace elasym;

namespace {

// Kelvin 6x6 view of an order-4 symmetric tensor, assembled index by index
// (independent of Harm4Params::kelvin)
Matrix6d kelvin_of_tensor(const SymTensor& h) {
    const int pairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
    const double w[6] = {1, 1, 1, std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0)};
    Matrix6d K;
    for (int I = 0; I < 6; ++I)
        for (int J = 0; J < 6; ++J)
            K(I, J) = w[I] * w[J] *
                      h.component({pairs[I][0], pairs[I][1], pairs[J][0], pairs[J][1]});
    return K;
}

Harm4Params random_params(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Harm4Params p;
    p.L1 = gauss(rng); p.L2 = gauss(rng); p.L3 = gauss(rng);
    p.X1 = gauss(rng); p.X2 = gauss(rng);
    p.Y1 = gauss(rng); p.Y2 = gauss(rng);
    p.Z1 = gauss(rng); p.Z2 = gauss(rng);
    return p;
}

SymTensor cubic_normal_form() {
    Poly p(4);
    p.set_coeff(4, 0, 0, 1.0);
    p.set_coeff(0, 4, 0, 1.0);
    p.set_coeff(0, 0, 4, 1.0);
    p.set_coeff(2, 2, 0, -3.0);
    p.set_coeff(2, 0, 2, -3.0);
    p.set_coeff(0, 2, 2, -3.0);
    return from_poly(p);
}

} // namespace

TEST_CASE("Harm4Params: parametrized tensor is harmonic and matches the Kelvin blocks") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        Harm4Params p = random_params(rng);
        SymTensor h = p.tensor();
        CHECK(norm(trace(h)) < 1e-13);
        Matrix6d K = kelvin_of_tensor(h);
        CHECK((K - p.kelvin()).norm() < 1e-13);
        CHECK((K - K.transpose()).norm() < 1e-14);
        Harm4Params back = Harm4Params::from_tensor(h);
        CHECK(std::abs(back.L1 - p.L1) < 1e-14);
        CHECK(std::abs(back.X2 - p.X2) < 1e-14);
        CHECK(std::abs(back.Z2 - p.Z2) < 1e-14);
    }
}

TEST_CASE("Kelvin entry (1,4) reads -sqrt(2) X1 when only X1 is set") {
    Harm4Params p;
    p.X1 = 0.75;
    Matrix6d K = p.kelvin();
    CHECK(K(0, 3) == doctest::Approx(-std::sqrt(2.0) * 0.75));
    CHECK((K - kelvin_of_tensor(p.tensor())).norm() < 1e-14);
}

TEST_CASE("tr d2 equals |H|^2") {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 10; ++rep) {
        HarmTensor H(random_harm4(rng, false));
        double n2 = dot(H.tensor(), H.tensor());
        CHECK(d2(H).trace() == doctest::Approx(n2).epsilon(1e-11));
    }
}

TEST_CASE("d2 agrees with the triple contraction of H with itself") {
    std::mt19937_64 rng(33);
    HarmTensor H(random_harm4(rng));
    Eigen::Matrix3d a = d2(H);
    Eigen::Matrix3d b = to_mat(sym_contract(H.tensor(), H.tensor(), 3));
    CHECK((a - b).norm() < 1e-12);
}

TEST_CASE("c3 = 2 d3'") {
    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 20; ++rep) {
        HarmTensor H(random_harm4(rng));
        Eigen::Matrix3d c3 = ck(H, 3);
        Eigen::Matrix3d d3m = d3(H);
        Eigen::Matrix3d d3dev = d3m - (d3m.trace() / 3.0) * Eigen::Matrix3d::Identity();
        CHECK((c3 - 2.0 * d3dev).norm() <= 1e-12);
    }
}

TEST_CASE("zero tensor maps to zero covariants; ck range is 3..5") {
    HarmTensor H0{SymTensor(4)};
    CHECK(d2(H0).norm() == 0.0);
    CHECK(d3(H0).norm() == 0.0);
    CHECK(ck(H0, 4).norm() == 0.0);
    CHECK_THROWS_AS(ck(H0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ck(H0, 6), std::invalid_argument);
}

TEST_CASE("Boehler set: H = 0 gives all-zero invariants") {
    BoehlerSet b = boehler(HarmTensor{SymTensor(4)});
    for (int k = 2; k <= 10; ++k) CHECK(b.Jk(k) == 0.0);
}

TEST_CASE("Boehler set on a cubic form: isotropic d2 collapses the higher covariants") {
    HarmTensor H{cubic_normal_form()};
    BoehlerSet b = boehler(H);
    double J2 = b.Jk(2);
    CHECK(J2 > 0);
    for (int k : {5, 7, 8, 9, 10}) CHECK(b.dk(k).norm() <= 1e-10 * std::pow(J2, k / 2.0));
    CHECK(3.0 * b.Jk(4) == doctest::Approx(J2 * J2).epsilon(1e-11));
    CHECK(9.0 * b.Jk(6) == doctest::Approx(J2 * J2 * J2).epsilon(1e-11));
    CHECK(30.0 * b.Jk(3) * b.Jk(3) == doctest::Approx(J2 * J2 * J2).epsilon(1e-11));
    for (int k : {5, 7, 8, 9, 10}) CHECK(std::abs(b.Jk(k)) < 1e-10);
}

TEST_CASE("degree-6 trace relation holds on random harmonic tensors") {
    std::mt19937_64 rng(35);
    for (int rep = 0; rep < 50; ++rep) {
        HarmTensor H(random_harm4(rng)); // unit norm
        CHECK(std::abs(boehler_degree6_residual(H)) < 1e-9);
    }
}

TEST_CASE("Boehler covariants: d2, d3, d4, d6 symmetric, the rest generally not") {
    std::mt19937_64 rng(41);
    HarmTensor H(random_harm4(rng));
    BoehlerSet b = boehler(H);
    for (int k : {2, 3, 4, 6})
        CHECK((b.dk(k) - b.dk(k).transpose()).norm() < 1e-12);
    CHECK((b.dk(5) - b.dk(5).transpose()).norm() > 1e-6);
}

TEST_CASE("J_k are rotation invariant") {
    std::mt19937_64 rng(36);
    HarmTensor H(random_harm4(rng));
    for (int rep = 0; rep < 10; ++rep) {
        Rotation g = random_rotation(rng);
        BoehlerSet a = boehler(H);
        BoehlerSet b = boehler(HarmTensor{rotate(g, H.tensor())});
        for (int k = 2; k <= 10; ++k)
            CHECK(b.Jk(k) == doctest::Approx(a.Jk(k)).epsilon(1e-10));
    }
}

TEST_CASE("covariant basis census has the expected degree/order histogram") {
    // (degree, order) -> count; 70 entries in total including the metric
    const std::map<std::pair<int, int>, int> expected = {
        {{0, 2}, 1},
        {{1, 4}, 1},
        {{2, 0}, 1}, {{2, 2}, 1}, {{2, 4}, 1}, {{2, 6}, 1},
        {{3, 0}, 1}, {{3, 2}, 1}, {{3, 3}, 1}, {{3, 4}, 1}, {{3, 5}, 1}, {{3, 6}, 1}, {{3, 7}, 1}, {{3, 9}, 1},
        {{4, 0}, 1}, {{4, 2}, 2}, {{4, 3}, 1}, {{4, 4}, 1}, {{4, 5}, 2}, {{4, 6}, 1}, {{4, 7}, 1}, {{4, 9}, 1},
        {{5, 0}, 1}, {{5, 1}, 1}, {{5, 2}, 2}, {{5, 3}, 2}, {{5, 4}, 1}, {{5, 5}, 3}, {{5, 7}, 1},
        {{6, 0}, 1}, {{6, 1}, 1}, {{6, 2}, 2}, {{6, 3}, 3}, {{6, 4}, 1}, {{6, 5}, 1},
        {{7, 0}, 1}, {{7, 1}, 2}, {{7, 2}, 2}, {{7, 3}, 3},
        {{8, 0}, 1}, {{8, 1}, 2}, {{8, 2}, 2}, {{8, 3}, 2},
        {{9, 0}, 1}, {{9, 1}, 3}, {{9, 2}, 1},
        {{10, 0}, 1}, {{10, 1}, 2},
        {{11, 1}, 2},
        {{12, 1}, 1},
    };
    std::mt19937_64 rng(37);
    auto entries = eval_basis(HarmTensor(random_harm4(rng)));
    CHECK(entries.size() == 70);
    std::map<std::pair<int, int>, int> census;
    for (const auto& e : entries) {
        census[{e.degree, e.order}]++;
        CHECK(e.value.order() == e.order);
    }
    CHECK(census == expected);

    int order1 = 0, invariants = 0, deg12 = 0;
    for (const auto& e : entries) {
        order1 += (e.order == 1);
        invariants += (e.order == 0);
        deg12 += (e.degree == 12);
    }
    CHECK(order1 == 14);
    CHECK(invariants == 9);
    CHECK(deg12 == 1);
}

TEST_CASE("basis on H = 0: every positive-degree entry vanishes") {
    auto entries = eval_basis(HarmTensor{SymTensor(4)});
    for (const auto& e : entries) {
        if (e.degree > 0) CHECK(norm(e.value) == 0.0);
        else CHECK(norm(e.value) > 0.0); // q
    }
}

TEST_CASE("basis entries are homogeneous of their stated degree") {
    std::mt19937_64 rng(38);
    HarmTensor H(random_harm4(rng));
    HarmTensor H2x{2.0 * H.tensor()};
    auto a = eval_basis(H);
    auto b = eval_basis(H2x);
    for (size_t i = 0; i < a.size(); ++i) {
        double s = std::pow(2.0, a[i].degree);
        double scale = std::max(norm(a[i].value), 1e-300);
        CHECK(norm(b[i].value - s * a[i].value) <= 1e-12 * s * scale);
    }
}

TEST_CASE("basis entries are SO(3)-equivariant") {
    std::mt19937_64 rng(39);
    for (int rep = 0; rep < 5; ++rep) {
        HarmTensor H(random_harm4(rng));
        Rotation g = random_rotation(rng);
        auto a = eval_basis(HarmTensor{rotate(g, H.tensor())});
        auto b = eval_basis(H);
        for (size_t i = 0; i < a.size(); ++i) {
            SymTensor want = rotate(g, b[i].value);
            double scale = std::max(norm(want), 1e-300);
            CHECK(norm(a[i].value - want) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("all 14 first-order entries vanish on a transversely isotropic form") {
    SymTensor h = generate_normal_form(H4Class::transversely_isotropic, 7);
    auto entries = eval_basis(HarmTensor{h});
    for (const auto& e : entries)
        if (e.order == 1) CHECK(norm(e.value) <= 1e-10 * norm(h));
}

TEST_CASE("cov_space_dims: degenerate and generic cases") {
    CHECK(cov_space_dims(HarmTensor{SymTensor(4)}) == std::pair<int, int>{0, 1});
    CHECK(cov_space_dims(HarmTensor{cubic_normal_form()}) == std::pair<int, int>{0, 1});
    std::mt19937_64 rng(40);
    CHECK(cov_space_dims(HarmTensor(random_harm4(rng))) == std::pair<int, int>{3, 6});
    CHECK_THROWS_AS(cov_space_dims(HarmTensor{SymTensor(4)}, 0.0), std::invalid_argument);
}
