#include "elasym/sym2_classify.hpp"

#include <cmath>
#include <stdexcept>

#include "elasym/tensor.hpp"

namespace elasym {

const char* to_string(FamilyClass c) {
    switch (c) {
        case FamilyClass::isotropic: return "isotropic";
        case FamilyClass::transversely_isotropic: return "transversely isotropic";
        case FamilyClass::orthotropic: return "orthotropic";
        case FamilyClass::monoclinic: return "monoclinic";
        case FamilyClass::triclinic: return "triclinic";
    }
    return "?";
}

Eigen::Vector3d commutator_vector(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
    SymTensor t = trace(cross(sym2_from_mat(a), sym2_from_mat(b)));
    return to_vec(t);
}

namespace {

double cross_self_norm(const Eigen::Matrix3d& a) {
    SymTensor as = sym2_from_mat(a);
    return norm(cross(as, sym2_from_mat(a * a)));
}

double cross_pair_norm(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
    return norm(cross(sym2_from_mat(a), sym2_from_mat(b)));
}

} // namespace

bool is_orthotropic_single(const Eigen::Matrix3d& a, double tol) {
    double n = a.norm();
    if (n <= 0) return false;
    return cross_self_norm(a) > tol * n * n * n;
}

FamilyClass classify_family(const std::vector<Eigen::Matrix3d>& family, double tol) {
    if (family.empty()) throw std::invalid_argument("classify_family: empty family");
    if (tol <= 0) throw std::invalid_argument("classify_family: tol must be positive");

    // members below tol are zero; the rest get unit Frobenius norm
    std::vector<Eigen::Matrix3d> f;
    f.reserve(family.size());
    for (const auto& m : family) {
        double n = m.norm();
        f.push_back(n > tol ? Eigen::Matrix3d(m / n) : Eigen::Matrix3d::Zero());
    }
    const int n = static_cast<int>(f.size());

    // (1) isotropic: every deviator vanishes
    bool all_dev_zero = true;
    for (const auto& m : f) {
        Eigen::Matrix3d dev = m - (m.trace() / 3.0) * Eigen::Matrix3d::Identity();
        if (dev.norm() > tol) { all_dev_zero = false; break; }
    }
    if (all_dev_zero) return FamilyClass::isotropic;

    // (2) transversely isotropic: some member with nonzero deviator,
    // a_j x a_j^2 = 0, and a_j x a_k = 0 for every k
    for (int j = 0; j < n; ++j) {
        Eigen::Matrix3d dev = f[j] - (f[j].trace() / 3.0) * Eigen::Matrix3d::Identity();
        if (dev.norm() <= tol) continue;
        if (cross_self_norm(f[j]) > tol) continue;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k)
            if (cross_pair_norm(f[j], f[k]) > tol) ok = false;
        if (ok) return FamilyClass::transversely_isotropic;
    }

    // (3) orthotropic: all commutators vanish and some cross witness survives
    bool all_commute = true;
    for (int k = 0; k < n && all_commute; ++k)
        for (int l = k + 1; l < n && all_commute; ++l)
            if (commutator_vector(f[k], f[l]).norm() > tol) all_commute = false;
    if (all_commute) {
        bool witness = false;
        for (int j = 0; j < n && !witness; ++j)
            if (cross_self_norm(f[j]) > tol) witness = true;
        for (int i = 0; i < n && !witness; ++i)
            for (int j = i + 1; j < n && !witness; ++j)
                if (cross_pair_norm(f[i], f[j]) > tol) witness = true;
        if (witness) return FamilyClass::orthotropic;
    }

    // (4) monoclinic: the strongest commutator direction is a common
    // eigenvector of the whole family
    double best = 0.0;
    Eigen::Vector3d omega = Eigen::Vector3d::Zero();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Eigen::Vector3d w = commutator_vector(f[i], f[j]);
            if (w.norm() > best) { best = w.norm(); omega = w; }
        }
    if (best > tol) {
        Eigen::Vector3d u = omega.normalized();
        bool common = true;
        for (int k = 0; k < n && common; ++k)
            if ((f[k] * u).cross(u).norm() > tol) common = false;
        if (common) return FamilyClass::monoclinic;
    }

    return FamilyClass::triclinic;
}

Eigen::Matrix3d orthotropic_combination(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b,
                                        double tol) {
    if (is_orthotropic_single(a, tol)) return a;
    if (is_orthotropic_single(b, tol)) return b;

    Eigen::Matrix3d ad = a - (a.trace() / 3.0) * Eigen::Matrix3d::Identity();
    Eigen::Matrix3d bd = b - (b.trace() / 3.0) * Eigen::Matrix3d::Identity();
    if (ad.norm() <= tol || bd.norm() <= tol)
        throw std::invalid_argument("orthotropic_combination: pair is at least transversely isotropic");

    // Gram step: atil = a' - (tr(a'b')/tr(b'^2)) b'
    double s = (ad * bd).trace() / (bd * bd).trace();
    Eigen::Matrix3d atil = ad - s * bd;
    if (is_orthotropic_single(atil, tol)) return a - s * b;

    // scan d(t) = t atil + (1-t) b'; the deviator discriminant
    // (tr d^2)^3 - 6 (tr d^3)^2 vanishes at no more than six of these t
    const double ts[] = {0.0, 1.0, -1.0, 2.0, -2.0, 0.5, -0.5, 3.0, -3.0};
    for (double t : ts) {
        Eigen::Matrix3d d = t * atil + (1.0 - t) * bd;
        double tr2 = (d * d).trace();
        double tr3 = (d * d * d).trace();
        double p = tr2 * tr2 * tr2 - 6.0 * tr3 * tr3;
        if (std::abs(p) > tol * std::pow(std::max(tr2, 1e-300), 3)) {
            // same deviator as alpha a + beta b with alpha = t, beta = 1-t-ts
            Eigen::Matrix3d comb = t * a + (1.0 - t - t * s) * b;
            if (is_orthotropic_single(comb, tol)) return comb;
        }
    }
    throw std::invalid_argument("orthotropic_combination: pair is at least transversely isotropic");
}

FamilyClass eigen_class_single(const Eigen::Matrix3d& a, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (a + a.transpose()));
    Eigen::Vector3d ev = es.eigenvalues();
    double scale = std::max(a.norm(), 1e-300);
    bool eq01 = std::abs(ev(0) - ev(1)) <= tol * scale;
    bool eq12 = std::abs(ev(1) - ev(2)) <= tol * scale;
    if (eq01 && eq12) return FamilyClass::isotropic;
    if (eq01 || eq12) return FamilyClass::transversely_isotropic;
    return FamilyClass::orthotropic;
}

} // namespace elasym
