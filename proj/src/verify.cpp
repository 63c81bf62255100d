#include "elasym/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "elasym/batch.hpp"
#include "elasym/binary_form.hpp"
#include "elasym/elasticity.hpp"
#include "elasym/h4.hpp"
#include "elasym/h4_classify.hpp"
#include "elasym/random.hpp"

namespace elasym::verify {

namespace {

const H4Class kAllClasses[] = {
    H4Class::isotropic, H4Class::cubic, H4Class::transversely_isotropic,
    H4Class::trigonal, H4Class::tetragonal, H4Class::orthotropic,
    H4Class::monoclinic, H4Class::triclinic,
};

void add(Suite& s, const std::string& name, double residual, double threshold) {
    s.checks.push_back({name, residual, threshold, residual <= threshold});
}

double rel(const SymTensor& got, const SymTensor& want) {
    return norm(got - want) / std::max(norm(want), 1e-300);
}

} // namespace

bool Suite::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Suite core_suite() {
    Suite s{"core", {}};
    std::mt19937_64 rng(2024);

    double prod_eq = 0, contr_eq = 0, cross_eq = 0, antisym = 0, casimir = 0;
    for (int rep = 0; rep < 50; ++rep) {
        Rotation g = random_rotation(rng);
        SymTensor s1 = random_sym_tensor(rng, 4);
        SymTensor s2 = random_sym_tensor(rng, 2);
        prod_eq = std::max(prod_eq, rel(sym_product(rotate(g, s1), rotate(g, s2)),
                                        rotate(g, sym_product(s1, s2))));
        for (int r = 0; r <= 2; ++r)
            contr_eq = std::max(contr_eq, rel(sym_contract(rotate(g, s1), rotate(g, s2), r),
                                              rotate(g, sym_contract(s1, s2, r))));
        cross_eq = std::max(cross_eq, rel(cross(rotate(g, s1), rotate(g, s2)),
                                          rotate(g, cross(s1, s2))));
        antisym = std::max(antisym, norm(cross(s1, s2) + cross(s2, s1)) /
                                        (norm(s1) * norm(s2)));
        casimir = std::max(casimir, norm(cross(s1, SymTensor::metric())) / norm(s1));
    }
    add(s, "sym_product equivariance", prod_eq, 1e-10);
    add(s, "sym_contract equivariance", contr_eq, 1e-10);
    add(s, "cross equivariance", cross_eq, 1e-10);
    add(s, "cross antisymmetry", antisym, 1e-15);
    add(s, "cross with the metric", casimir, 1e-14);

    double decomp = 0;
    for (int rep = 0; rep < 50; ++rep) {
        SymTensor t = random_sym_tensor(rng, 4 + rep % 3);
        decomp = std::max(decomp, norm(harmonic_reconstruct(harmonic_decompose(t)) - t) / norm(t));
    }
    add(s, "harmonic decomposition round trip", decomp, 1e-12);

    double ela_rt = 0;
    std::normal_distribution<double> gauss;
    for (int rep = 0; rep < 100; ++rep) {
        Matrix6d m;
        for (int i = 0; i < 6; ++i)
            for (int j = i; j < 6; ++j) m(i, j) = m(j, i) = gauss(rng);
        ElasticityTensor e = ElasticityTensor::from_voigt(m);
        ela_rt = std::max(ela_rt, (reconstruct(decompose(e)).voigt() - e.voigt()).norm() / e.norm());
    }
    add(s, "elasticity decompose/reconstruct round trip", ela_rt, 1e-12);
    return s;
}

Suite covariants_suite() {
    Suite s{"covariants", {}};
    std::mt19937_64 rng(3025);

    // census of the 70-entry basis
    auto entries = eval_basis(HarmTensor(random_harm4(rng)));
    int order1 = 0, invariants = 0, deg12 = 0;
    for (const auto& e : entries) {
        order1 += (e.order == 1);
        invariants += (e.order == 0);
        deg12 += (e.degree == 12);
    }
    bool census_ok = entries.size() == 70 && order1 == 14 && invariants == 9 && deg12 == 1;
    add(s, "basis census (70 entries, 14 order-1, 9 invariants, 1 deg-12)",
        census_ok ? 0.0 : 1.0, 0.5);

    add(s, "basis equivariance over 50 (g, H) pairs",
        batch::basis_equivariance_residual(50, 777), 1e-8);

    double hom = 0;
    {
        HarmTensor H(random_harm4(rng));
        auto a = eval_basis(H);
        auto b = eval_basis(HarmTensor{2.0 * H.tensor()});
        for (size_t i = 0; i < a.size(); ++i) {
            double f = std::pow(2.0, a[i].degree);
            hom = std::max(hom, norm(b[i].value - f * a[i].value) /
                                    std::max(f * norm(a[i].value), 1e-300));
        }
    }
    add(s, "basis homogeneity at s = 2", hom, 1e-12);

    double deg6 = 0, d3rel = 0;
    for (int rep = 0; rep < 200; ++rep) {
        HarmTensor H(random_harm4(rng));
        deg6 = std::max(deg6, std::abs(boehler_degree6_residual(H)));
        Eigen::Matrix3d c3 = ck(H, 3);
        Eigen::Matrix3d d3m = d3(H);
        Eigen::Matrix3d dev = d3m - (d3m.trace() / 3.0) * Eigen::Matrix3d::Identity();
        d3rel = std::max(d3rel, (c3 - 2.0 * dev).norm());
    }
    add(s, "degree-6 trace relation on 200 random H", deg6, 1e-9);
    add(s, "c3 = 2 d3' on 200 random H", d3rel, 1e-12);

    double cubic_syz = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SymTensor h = generate_normal_form(H4Class::cubic, seed);
        h *= 1.0 / norm(h);
        h = rotate(random_rotation(rng), h);
        BoehlerSet bo = boehler(HarmTensor{h});
        double J2 = bo.Jk(2);
        cubic_syz = std::max({cubic_syz,
                              std::abs(3 * bo.Jk(4) - J2 * J2),
                              std::abs(30 * bo.Jk(3) * bo.Jk(3) - J2 * J2 * J2),
                              std::abs(9 * bo.Jk(6) - J2 * J2 * J2),
                              std::abs(bo.Jk(5)), std::abs(bo.Jk(7)), std::abs(bo.Jk(8)),
                              std::abs(bo.Jk(9)), std::abs(bo.Jk(10))});
    }
    add(s, "cubic syzygies on rotated normal forms", cubic_syz, 1e-9);

    int dim_bad = 0;
    auto expect = [](H4Class c) -> std::pair<int, int> {
        switch (c) {
            case H4Class::isotropic:
            case H4Class::cubic: return {0, 1};
            case H4Class::transversely_isotropic:
            case H4Class::tetragonal:
            case H4Class::trigonal: return {0, 2};
            case H4Class::orthotropic: return {0, 3};
            case H4Class::monoclinic: return {1, 4};
            case H4Class::triclinic: return {3, 6};
        }
        return {-1, -1};
    };
    for (H4Class cls : kAllClasses)
        if (cov_space_dims(HarmTensor{generate_normal_form(cls, 21)}) != expect(cls)) ++dim_bad;
    add(s, "covariant space dimensions per class", dim_bad, 0.5);

    double jk_inv = 0;
    {
        HarmTensor H(random_harm4(rng));
        BoehlerSet a = boehler(H);
        for (int rep = 0; rep < 20; ++rep) {
            BoehlerSet b = boehler(HarmTensor{rotate(random_rotation(rng), H.tensor())});
            for (int k = 2; k <= 10; ++k)
                jk_inv = std::max(jk_inv, std::abs(a.Jk(k) - b.Jk(k)) /
                                              std::max(std::abs(a.Jk(k)), 1e-300));
        }
    }
    add(s, "J_k rotation invariance", jk_inv, 1e-10);
    return s;
}

Suite bridge_suite() {
    Suite s{"bridge", {}};
    std::mt19937_64 rng(4026);

    Rational k = kappa(4, 4, 1);
    add(s, "kappa(4,4,1) = 7/12 exactly", (k.num == 7 && k.den == 12) ? 0.0 : 1.0, 0.5);

    double grid = 0;
    for (int rep = 0; rep < 5; ++rep)
        for (int n : {2, 4})
            for (int p : {2, 4}) {
                HarmTensor h1{harmonic_part(random_sym_tensor(rng, n))};
                HarmTensor h2{harmonic_part(random_sym_tensor(rng, p))};
                for (int r = 0; r <= std::min(n, p); ++r) {
                    TranslationResidual res = verify_translation(h1, h2, r);
                    grid = std::max(grid, res.even);
                    if (res.odd_checked) grid = std::max(grid, res.odd);
                }
            }
    add(s, "transvectant translation identities, n,p in {2,4}", grid, 1e-9);

    double rs = 0;
    for (int order = 1; order <= 4; ++order)
        for (int rep = 0; rep < 10; ++rep) {
            SymTensor h = harmonic_part(random_sym_tensor(rng, order));
            BinaryForm f = cartan_pullback(HarmTensor{h});
            double worst = 0;
            for (int kk = 0; kk <= f.degree; ++kk) {
                std::complex<double> want =
                    ((kk % 2) ? -1.0 : 1.0) * std::conj(f.a[kk]);
                worst = std::max(worst, std::abs(f.a[f.degree - kk] - want));
            }
            rs = std::max(rs, worst / std::max(norm(f), 1e-300));
        }
    add(s, "real-form condition of Cartan pullbacks", rs, 1e-12);

    double intertwine = 0;
    std::normal_distribution<double> gauss;
    for (int rep = 0; rep < 10; ++rep) {
        double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
        Rotation g = Rotation::from_quaternion(w, x, y, z);
        Eigen::Matrix2cd gamma = su2_from_quaternion(w, x, y, z);
        SymTensor h = harmonic_part(random_sym_tensor(rng, 4));
        BinaryForm lhs = cartan_pullback(HarmTensor{rotate(g, h)});
        BinaryForm rhs = act(gamma, cartan_pullback(HarmTensor{h}));
        intertwine = std::max(intertwine, norm(lhs - rhs) / std::max(norm(rhs), 1e-300));
    }
    add(s, "pullback intertwines the double cover", intertwine, 1e-10);
    return s;
}

std::vector<Suite> run_suites(const std::string& which) {
    if (which == "core") return {core_suite()};
    if (which == "covariants") return {covariants_suite()};
    if (which == "bridge") return {bridge_suite()};
    if (which == "all") return {core_suite(), covariants_suite(), bridge_suite()};
    throw std::invalid_argument("unknown suite: " + which);
}

} // namespace elasym::verify
