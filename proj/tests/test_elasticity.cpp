#include <doctest.h>

#include <cmath>
#include <random>

#include "elasym/elasticity.hpp"
#include "elasym/random.hpp"

using namespace elasym;

namespace {

const H4Class kAllClasses[] = {
    H4Class::isotropic, H4Class::cubic, H4Class::transversely_isotropic,
    H4Class::trigonal, H4Class::tetragonal, H4Class::orthotropic,
    H4Class::monoclinic, H4Class::triclinic,
};

ElasticityTensor random_elasticity(std::mt19937_64& rng) {
    Matrix6d m;
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            m(i, j) = gauss(rng);
            m(j, i) = m(i, j);
        }
    return ElasticityTensor::from_voigt(m);
}

double degree_scale(const HarmonicDecomposition& d, int dh, int da, int db) {
    double nh = std::max(norm(d.H), 1e-300);
    double na = std::max(d.a.norm(), 1e-300);
    double nb = std::max(d.b.norm(), 1e-300);
    return std::pow(nh, dh) * std::pow(na, da) * std::pow(nb, db);
}

} // namespace

TEST_CASE("isotropic Hooke tensor has the classical Voigt pattern") {
    ElasticityTensor e = reconstruct(1.0, 1.0, Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                     SymTensor(4));
    Matrix6d v = e.voigt();
    for (int i = 0; i < 3; ++i) {
        CHECK(v(i, i) == doctest::Approx(3.0)); // lambda + 2 mu
        CHECK(v(i + 3, i + 3) == doctest::Approx(1.0)); // mu
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(v(i, j) == doctest::Approx(1.0)); // lambda
    }
    CHECK(v.bottomLeftCorner<3, 3>().norm() == 0.0);
}

TEST_CASE("Voigt round trip is exact; Kelvin view carries the shear weights") {
    std::mt19937_64 rng(71);
    ElasticityTensor e = random_elasticity(rng);
    Matrix6d v = e.voigt();
    CHECK((ElasticityTensor::from_voigt(v).voigt() - v).norm() == 0.0);
    CHECK((ElasticityTensor::from_kelvin(e.kelvin()).voigt() - v).norm() < 1e-14 * v.norm());
    CHECK(e.kelvin()(0, 3) == doctest::Approx(std::sqrt(2.0) * v(0, 3)));
    CHECK(e.kelvin()(3, 3) == doctest::Approx(2.0 * v(3, 3)));
    CHECK((ElasticityTensor::from_components21(e.components21()).voigt() - v).norm() == 0.0);
}

TEST_CASE("Kelvin entry (1,4) of a pure-X1 harmonic part") {
    Harm4Params p;
    p.X1 = 0.6;
    ElasticityTensor e = reconstruct(0, 0, Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(), p.tensor());
    CHECK(e.kelvin()(0, 3) == doctest::Approx(-std::sqrt(2.0) * 0.6));
}

TEST_CASE("asymmetric Voigt input is rejected") {
    Matrix6d m = Matrix6d::Identity();
    m(0, 1) = 1e-3;
    CHECK_THROWS_AS(ElasticityTensor::from_voigt(m), std::invalid_argument);
}

TEST_CASE("dilatation and Voigt tensors") {
    CHECK(dilatation(ElasticityTensor{}).norm() == 0.0);
    CHECK(voigt_tensor(ElasticityTensor{}).norm() == 0.0);

    std::mt19937_64 rng(72);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int rep = 0; rep < 5; ++rep) {
        double lambda = u(rng), mu = u(rng);
        ElasticityTensor e = reconstruct(lambda, mu, Eigen::Matrix3d::Zero(),
                                         Eigen::Matrix3d::Zero(), SymTensor(4));
        Eigen::Matrix3d d = dilatation(e), v = voigt_tensor(e);
        CHECK((d - (3 * lambda + 2 * mu) * Eigen::Matrix3d::Identity()).norm() < 1e-13);
        CHECK((v - (lambda + 4 * mu) * Eigen::Matrix3d::Identity()).norm() < 1e-13);
        CHECK(d.trace() == doctest::Approx(9 * lambda + 6 * mu));
        CHECK(v.trace() == doctest::Approx(3 * lambda + 12 * mu));
    }

    // pure-a and pure-b parts feed d and v with the stated weights
    std::mt19937_64 rng2(73);
    Eigen::Matrix3d a = random_deviator(rng2), b = random_deviator(rng2);
    ElasticityTensor ea = reconstruct(0, 0, a, Eigen::Matrix3d::Zero(), SymTensor(4));
    ElasticityTensor eb = reconstruct(0, 0, Eigen::Matrix3d::Zero(), b, SymTensor(4));
    CHECK((dilatation(ea) - 3 * a).norm() < 1e-13);
    CHECK((voigt_tensor(ea) - 2 * a).norm() < 1e-13);
    CHECK((dilatation(eb) - 4 * b).norm() < 1e-13);
    CHECK((voigt_tensor(eb) - 5 * b).norm() < 1e-13);
}

TEST_CASE("decompose recovers constructed inputs exactly") {
    std::mt19937_64 rng(74);
    Eigen::Matrix3d a = random_deviator(rng), b = random_deviator(rng);
    SymTensor h = random_harm4(rng);
    ElasticityTensor e = reconstruct(2.0, 3.0, a, b, h);
    HarmonicDecomposition dec = decompose(e);
    CHECK(dec.lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dec.mu == doctest::Approx(3.0).epsilon(1e-12));
    CHECK((dec.a - a).norm() < 1e-12);
    CHECK((dec.b - b).norm() < 1e-12);
    CHECK(norm(dec.H - h) < 1e-12);
    CHECK(is_harmonic(dec.H, 1e-12));
}

TEST_CASE("cubic harmonic part survives the round trip") {
    Harm4Params p;
    p.L1 = p.L2 = p.L3 = 0.7;
    SymTensor h = p.tensor();
    ElasticityTensor e = reconstruct(1.0, 1.0, Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(), h);
    CHECK(norm(decompose(e).H - h) <= 1e-12 * norm(h));
}

TEST_CASE("reconstruct(decompose(E)) = E on random tensors") {
    std::mt19937_64 rng(75);
    for (int rep = 0; rep < 50; ++rep) {
        ElasticityTensor e = random_elasticity(rng);
        ElasticityTensor back = reconstruct(decompose(e));
        CHECK((back.voigt() - e.voigt()).norm() <= 1e-12 * e.norm());
    }
}

TEST_CASE("reconstruct is linear and validates its inputs") {
    std::mt19937_64 rng(76);
    Eigen::Matrix3d a1 = random_deviator(rng), a2 = random_deviator(rng);
    Eigen::Matrix3d b1 = random_deviator(rng), b2 = random_deviator(rng);
    SymTensor h1 = random_harm4(rng), h2 = random_harm4(rng);
    ElasticityTensor sum = reconstruct(1, 2, a1, b1, h1) + reconstruct(3, 4, a2, b2, h2);
    ElasticityTensor direct = reconstruct(4, 6, a1 + a2, b1 + b2, h1 + h2);
    CHECK((sum.voigt() - direct.voigt()).norm() < 1e-12 * direct.norm());

    CHECK_THROWS_AS(reconstruct(0, 0, Eigen::Matrix3d::Identity(), Eigen::Matrix3d::Zero(), SymTensor(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(reconstruct(0, 0, Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                sym_product(SymTensor::metric(), SymTensor::metric())),
                    std::invalid_argument);
}

TEST_CASE("elasticity classification fixtures") {
    CHECK(classify_elasticity(reconstruct(1, 1, Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                          SymTensor(4))) == H4Class::isotropic);

    Harm4Params pc;
    pc.L1 = pc.L2 = pc.L3 = 0.7;
    CHECK(classify_elasticity(reconstruct(1, 1, Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                          pc.tensor())) == H4Class::cubic);

    // orthotropic harmonic part with generic diagonal deviators, rotated
    std::mt19937_64 rng(77);
    Harm4Params po;
    po.L1 = 1; po.L2 = 2; po.L3 = 4;
    Eigen::Matrix3d a = Eigen::Vector3d(0.4, -1.1, 0.7).asDiagonal();
    Eigen::Matrix3d b = Eigen::Vector3d(-0.8, 0.3, 0.5).asDiagonal();
    ElasticityTensor e = reconstruct(2, 1, a, b, po.tensor());
    for (int rep = 0; rep < 20; ++rep) {
        Rotation g = random_rotation(rng);
        CHECK(classify_elasticity(rotate(g, e)) == H4Class::orthotropic);
    }
}

TEST_CASE("generated fixtures classify to their class, rotated or not") {
    for (H4Class cls : kAllClasses)
        for (std::uint64_t seed : {1, 2, 3}) {
            CHECK(classify_elasticity(generate_elasticity(cls, seed, false)) == cls);
            CHECK(classify_elasticity(generate_elasticity(cls, seed, true)) == cls);
        }
}

TEST_CASE("fixture generator round trip, 8 classes x 20 seeds x rotate on/off") {
    for (H4Class cls : kAllClasses)
        for (std::uint64_t seed = 100; seed < 120; ++seed)
            for (bool rot : {false, true})
                CHECK(classify_elasticity(generate_elasticity(cls, seed, rot)) == cls);
}

TEST_CASE("classification ledger reports the cascade") {
    ClassificationLedger led;
    classify_elasticity(generate_elasticity(H4Class::orthotropic, 5, true), 1e-8, &led);
    CHECK(!led.rows.empty());
    bool has_fo = false;
    for (const auto& f : led.families) has_fo |= (f.first == "F_o" && f.second == "orthotropic");
    CHECK(has_fo);
}

TEST_CASE("zeroing a and b never yields a strictly finer class") {
    for (H4Class cls : kAllClasses)
        for (std::uint64_t seed : {4, 5}) {
            ElasticityTensor e = generate_elasticity(cls, seed, true);
            HarmonicDecomposition dec = decompose(e);
            ElasticityTensor h_only = reconstruct(dec.lambda, dec.mu, Eigen::Matrix3d::Zero(),
                                                  Eigen::Matrix3d::Zero(), dec.H);
            CHECK(poset_leq(cls, classify_elasticity(h_only)));
        }
}

TEST_CASE("classification is unchanged when (d', v') replaces (a, b)") {
    for (H4Class cls : kAllClasses) {
        ElasticityTensor e = generate_elasticity(cls, 6, true);
        HarmonicDecomposition dec = decompose(e);
        ElasticityTensor swapped =
            reconstruct(dec.lambda, dec.mu, dec.dilatation_dev(), dec.voigt_dev(), dec.H);
        CHECK(classify_elasticity(swapped) == cls);
    }
}

TEST_CASE("integrity basis: count and degenerate values") {
    auto zero = integrity_basis(ElasticityTensor{});
    CHECK(zero.size() == 297);
    for (const auto& e : zero) CHECK(e.value == 0.0);

    auto iso = integrity_basis(reconstruct(2.0, 3.0, Eigen::Matrix3d::Zero(),
                                           Eigen::Matrix3d::Zero(), SymTensor(4)));
    for (const auto& e : iso) {
        if (e.label == "lambda") CHECK(e.value == doctest::Approx(2.0));
        else if (e.label == "mu") CHECK(e.value == doctest::Approx(3.0));
        else CHECK(std::abs(e.value) < 1e-12);
    }
}

TEST_CASE("integrity basis entries are rotation invariant") {
    std::mt19937_64 rng(78);
    ElasticityTensor e = random_elasticity(rng);
    HarmonicDecomposition dec = decompose(e);
    auto base = integrity_basis(dec);
    for (int rep = 0; rep < 3; ++rep) {
        Rotation g = random_rotation(rng);
        auto rot = integrity_basis(rotate(g, e));
        for (size_t i = 0; i < base.size(); ++i) {
            double scale = std::max({std::abs(base[i].value),
                                     degree_scale(dec, base[i].deg_h, base[i].deg_a, base[i].deg_b)});
            CHECK(std::abs(rot[i].value - base[i].value) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("integrity basis entries are multidegree homogeneous") {
    std::mt19937_64 rng(79);
    HarmonicDecomposition dec;
    dec.lambda = 1.3;
    dec.mu = 0.8;
    dec.a = random_deviator(rng);
    dec.b = random_deviator(rng);
    dec.H = random_harm4(rng);
    HarmonicDecomposition scaled = dec;
    scaled.a *= 2.0;
    scaled.b *= 3.0;
    scaled.H *= 5.0;
    auto base = integrity_basis(dec);
    auto big = integrity_basis(scaled);
    for (size_t i = 0; i < base.size(); ++i) {
        double factor = std::pow(5.0, base[i].deg_h) * std::pow(2.0, base[i].deg_a) *
                        std::pow(3.0, base[i].deg_b);
        double scale = std::max(std::abs(base[i].value) * factor,
                                factor * degree_scale(dec, base[i].deg_h, base[i].deg_a, base[i].deg_b));
        CHECK(std::abs(big[i].value - factor * base[i].value) <= 1e-10 * scale);
    }
}
