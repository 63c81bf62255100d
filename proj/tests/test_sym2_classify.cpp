#include <doctest.h>

#include <cmath>
#include <random>

#include "elasym/random.hpp"
#include "elasym/rotation.hpp"
#include "elasym/sym2_classify.hpp"
#include "elasym/tensor.hpp"

using namespace elasym;

namespace {

Eigen::Matrix3d diag(double a, double b, double c) {
    return Eigen::Vector3d(a, b, c).asDiagonal();
}

Eigen::Matrix3d sym_pair(int i, int j) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(i, j) = m(j, i) = 1.0;
    return m;
}

std::vector<Eigen::Matrix3d> rotated(const std::vector<Eigen::Matrix3d>& f, const Rotation& g) {
    std::vector<Eigen::Matrix3d> out;
    for (const auto& m : f) out.push_back(g.matrix() * m * g.matrix().transpose());
    return out;
}

} // namespace

TEST_CASE("single-tensor fixtures") {
    CHECK(classify_family({Eigen::Matrix3d::Identity()}, 1e-8) == FamilyClass::isotropic);
    CHECK(classify_family({diag(1, 1, 2)}, 1e-8) == FamilyClass::transversely_isotropic);
    CHECK(classify_family({diag(1, 2, 3)}, 1e-8) == FamilyClass::orthotropic);
}

TEST_CASE("pair fixture: common eigenvector only") {
    // trans iso around e3 plus a shear in the (1,3)-plane: Z2 around e2
    std::vector<Eigen::Matrix3d> f{diag(1, 1, 2), sym_pair(0, 2)};
    CHECK(classify_family(f, 1e-8) == FamilyClass::monoclinic);
    Eigen::Vector3d w = commutator_vector(f[0], f[1]);
    CHECK(w.normalized().cwiseAbs()(1) == doctest::Approx(1.0)); // along e2
    CHECK(((f[0] * w).cross(w)).norm() < 1e-14);
    CHECK(((f[1] * w).cross(w)).norm() < 1e-14);
}

TEST_CASE("triple fixtures for the remaining classes") {
    // two coaxial members stay transversely isotropic
    CHECK(classify_family({diag(1, 1, 2), diag(3, 3, -1)}, 1e-8) == FamilyClass::transversely_isotropic);
    // commuting distinct-axis members: orthotropic
    CHECK(classify_family({diag(1, 1, 2), diag(5, 2, 2)}, 1e-8) == FamilyClass::orthotropic);
    // two shears with no common eigenvector: triclinic
    CHECK(classify_family({diag(1, 1, 2), sym_pair(0, 2), sym_pair(0, 1)}, 1e-8) == FamilyClass::triclinic);
}

TEST_CASE("errors: empty family, bad tolerance") {
    CHECK_THROWS_AS(classify_family({}, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(classify_family({diag(1, 2, 3)}, 0.0), std::invalid_argument);
}

TEST_CASE("commutator_vector fixtures") {
    Eigen::Matrix3d a = diag(1, 0, 0);
    CHECK(commutator_vector(a, a).norm() == 0.0);
    Eigen::Vector3d w = commutator_vector(a, sym_pair(0, 1));
    CHECK((w - Eigen::Vector3d(0, 0, 1.0 / 3.0)).norm() < 1e-14);
    // independent component route: (1/3) eps:(ab)
    std::mt19937_64 rng(50);
    for (int rep = 0; rep < 20; ++rep) {
        Eigen::Matrix3d x = random_sym2(rng), y = random_sym2(rng);
        Eigen::Vector3d direct = commutator_vector(x, y);
        Eigen::Vector3d oracle = eps_contract(x * y) / 3.0;
        CHECK((direct - oracle).norm() <= 1e-13 * std::max(1.0, oracle.norm()));
        if ((x * y - y * x).norm() < 1e-14) CHECK(direct.norm() < 1e-13);
    }
    CHECK(commutator_vector(diag(1, 2, 3), diag(4, 5, 6)).norm() < 1e-15);
}

TEST_CASE("is_orthotropic_single") {
    CHECK(is_orthotropic_single(diag(1, 2, 3)));
    CHECK_FALSE(is_orthotropic_single(diag(1, 1, 2)));
    CHECK_FALSE(is_orthotropic_single(Eigen::Matrix3d::Identity()));
}

TEST_CASE("orthotropic_combination") {
    std::mt19937_64 rng(51);
    // already orthotropic: returned as is
    Eigen::Matrix3d a = diag(1, 2, 3);
    CHECK((orthotropic_combination(a, diag(1, 1, 2)) - a).norm() == 0.0);

    // two transversely isotropic tensors with distinct axes
    for (int rep = 0; rep < 20; ++rep) {
        Rotation g = random_rotation(rng);
        Eigen::Matrix3d t1 = diag(1, 1, 2);
        Eigen::Matrix3d t2 = g.matrix() * diag(3, -1, -1) * g.matrix().transpose();
        if (!is_orthotropic_single(t1, 1e-8) && !is_orthotropic_single(t2, 1e-8) &&
            classify_family({t1, t2}, 1e-8) != FamilyClass::transversely_isotropic) {
            Eigen::Matrix3d c = orthotropic_combination(t1, t2);
            CHECK(is_orthotropic_single(c, 1e-8));
        }
    }

    // proportional-to-identity member: precondition violated
    CHECK_THROWS_AS(orthotropic_combination(Eigen::Matrix3d::Identity(), diag(1, 1, 2)),
                    std::invalid_argument);
    // coaxial pair: precondition violated
    CHECK_THROWS_AS(orthotropic_combination(diag(1, 1, 2), diag(2, 2, 5)), std::invalid_argument);
}

TEST_CASE("classification is rotation invariant") {
    std::mt19937_64 rng(52);
    std::vector<std::vector<Eigen::Matrix3d>> fixtures = {
        {Eigen::Matrix3d::Identity()},
        {diag(1, 1, 2)},
        {diag(1, 2, 3)},
        {diag(1, 1, 2), sym_pair(0, 2)},
        {diag(1, 1, 2), sym_pair(0, 2), sym_pair(0, 1)},
    };
    for (const auto& f : fixtures) {
        FamilyClass want = classify_family(f, 1e-8);
        for (int rep = 0; rep < 50; ++rep) {
            Rotation g = random_rotation(rng);
            CHECK(classify_family(rotated(f, g), 1e-8) == want);
        }
    }
}

TEST_CASE("classification is scale invariant and stable under appending q") {
    std::mt19937_64 rng(53);
    std::vector<std::vector<Eigen::Matrix3d>> fixtures = {
        {diag(1, 1, 2)},
        {diag(1, 2, 3)},
        {diag(1, 1, 2), sym_pair(0, 2)},
        {diag(1, 1, 2), sym_pair(0, 2), sym_pair(0, 1)},
    };
    for (const auto& f : fixtures) {
        FamilyClass want = classify_family(f, 1e-8);
        for (double s : {1e-3, 1e3}) {
            auto scaled = f;
            scaled[0] *= s;
            CHECK(classify_family(scaled, 1e-8) == want);
        }
        auto with_q = f;
        with_q.push_back(Eigen::Matrix3d::Identity());
        CHECK(classify_family(with_q, 1e-8) == want);
    }
}

TEST_CASE("diagonal families are never finer than orthotropic") {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Eigen::Matrix3d> f;
        int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) f.push_back(diag(u(rng), u(rng), u(rng)));
        FamilyClass c = classify_family(f, 1e-8);
        CHECK((c == FamilyClass::isotropic || c == FamilyClass::transversely_isotropic ||
               c == FamilyClass::orthotropic));
    }
}

TEST_CASE("single tensors agree with the eigenstructure oracle") {
    std::mt19937_64 rng(55);
    for (int rep = 0; rep < 200; ++rep) {
        Eigen::Matrix3d a = random_sym2(rng);
        CHECK(classify_family({a}, 1e-8) == eigen_class_single(a, 1e-8));
    }
}
