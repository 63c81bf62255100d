#include "elasym/h4_classify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace elasym {

const char* to_string(H4Class c) {
    switch (c) {
        case H4Class::isotropic: return "isotropic";
        case H4Class::cubic: return "cubic";
        case H4Class::transversely_isotropic: return "transversely isotropic";
        case H4Class::trigonal: return "trigonal";
        case H4Class::tetragonal: return "tetragonal";
        case H4Class::orthotropic: return "orthotropic";
        case H4Class::monoclinic: return "monoclinic";
        case H4Class::triclinic: return "triclinic";
    }
    return "?";
}

std::optional<H4Class> parse_h4_class(const std::string& name) {
    for (H4Class c : {H4Class::isotropic, H4Class::cubic, H4Class::transversely_isotropic,
                      H4Class::trigonal, H4Class::tetragonal, H4Class::orthotropic,
                      H4Class::monoclinic, H4Class::triclinic})
        if (name == to_string(c)) return c;
    if (name == "transversely-isotropic" || name == "transverse" || name == "transiso")
        return H4Class::transversely_isotropic;
    return std::nullopt;
}

bool poset_leq(H4Class a, H4Class b) {
    if (a == b) return true;
    auto up = [](H4Class c) -> std::vector<H4Class> {
        switch (c) {
            case H4Class::triclinic: return {H4Class::monoclinic};
            case H4Class::monoclinic: return {H4Class::orthotropic};
            case H4Class::orthotropic: return {H4Class::trigonal, H4Class::tetragonal};
            case H4Class::trigonal: return {H4Class::transversely_isotropic, H4Class::cubic};
            case H4Class::tetragonal: return {H4Class::transversely_isotropic, H4Class::cubic};
            case H4Class::transversely_isotropic: return {H4Class::isotropic};
            case H4Class::cubic: return {H4Class::isotropic};
            case H4Class::isotropic: return {};
        }
        return {};
    };
    std::vector<H4Class> frontier{a};
    while (!frontier.empty()) {
        H4Class c = frontier.back();
        frontier.pop_back();
        for (H4Class d : up(c)) {
            if (d == b) return true;
            frontier.push_back(d);
        }
    }
    return false;
}

namespace {

bool is_transversely_isotropic_sym2(const Eigen::Matrix3d& t, double tol) {
    double n = t.norm();
    if (n <= tol) return false;
    Eigen::Matrix3d u = t / n;
    Eigen::Matrix3d dev = u - (u.trace() / 3.0) * Eigen::Matrix3d::Identity();
    if (dev.norm() <= tol) return false;
    return !is_orthotropic_single(u, tol);
}

H4Class from_family(FamilyClass c) {
    switch (c) {
        case FamilyClass::isotropic: return H4Class::isotropic;
        case FamilyClass::transversely_isotropic: return H4Class::transversely_isotropic;
        case FamilyClass::orthotropic: return H4Class::orthotropic;
        case FamilyClass::monoclinic: return H4Class::monoclinic;
        case FamilyClass::triclinic: return H4Class::triclinic;
    }
    return H4Class::triclinic;
}

} // namespace

H4Class classify_h4(const SymTensor& H, double tol) {
    if (tol <= 0) throw std::invalid_argument("classify_h4: tol must be positive");
    if (H.order() != 4) throw std::invalid_argument("classify_h4: order-4 tensor expected");
    double n = norm(H);
    if (norm(trace(H)) > tol * std::max(n, 1e-300))
        throw std::invalid_argument("classify_h4: input is not harmonic");
    if (n <= 0) return H4Class::isotropic;

    HarmTensor Hn((1.0 / n) * H, tol);
    const SymTensor& h = Hn.tensor();

    Eigen::Matrix3d D2 = d2(Hn);
    Eigen::Matrix3d dev = D2 - (D2.trace() / 3.0) * Eigen::Matrix3d::Identity();
    if (dev.norm() <= tol)
        return (D2.norm() <= tol) ? H4Class::isotropic : H4Class::cubic;

    SymTensor d2s = sym2_from_mat(D2);
    Eigen::Matrix3d c3 = contract22(h, D2);

    if (!is_orthotropic_single(D2, tol)) {
        // d2 transversely isotropic
        SymTensor hxd2 = cross(h, d2s);
        if (norm(hxd2) <= tol) return H4Class::transversely_isotropic;
        if (norm(trace(hxd2)) <= tol) return H4Class::tetragonal;
        if (norm(cross(sym2_from_mat(c3), d2s)) <= tol) return H4Class::trigonal;
    }

    Eigen::Matrix3d c4 = contract22(h, c3);
    Eigen::Vector3d v5 = eps_contract(D2 * c3);
    Eigen::Vector3d v6 = eps_contract(D2 * c4);
    if (v5.norm() <= tol && v6.norm() <= tol &&
        classify_family({D2, c3}, tol) == FamilyClass::orthotropic)
        return H4Class::orthotropic;

    if (classify_family({D2, c3, c4}, tol) == FamilyClass::monoclinic)
        return H4Class::monoclinic;

    return H4Class::triclinic;
}

H4Class classify_pair_Ht(const SymTensor& H, const Eigen::Matrix3d& t_in, double tol) {
    if (tol <= 0) throw std::invalid_argument("classify_pair_Ht: tol must be positive");
    double tn = t_in.norm();
    if (tn <= 0 || !is_transversely_isotropic_sym2(t_in, tol))
        throw std::invalid_argument("classify_pair_Ht: t must be transversely isotropic");
    Eigen::Matrix3d t = t_in / tn;

    double n = norm(H);
    if (n <= 0) return H4Class::transversely_isotropic;
    SymTensor h = (1.0 / n) * H;
    if (norm(trace(h)) > tol) throw std::invalid_argument("classify_pair_Ht: H is not harmonic");

    SymTensor ts = sym2_from_mat(t);
    if (norm(cross(h, ts)) <= tol) return H4Class::transversely_isotropic;

    H4Class hc = classify_h4(h, tol);
    Eigen::Matrix3d Ht = contract22(h, t);

    if (hc == H4Class::cubic) {
        // cube-orientation cascade
        if (norm(trace(cross(h, ts))) <= tol) return H4Class::tetragonal;
        SymTensor txHt = cross(ts, sym2_from_mat(Ht));
        if (norm(txHt) <= tol) return H4Class::trigonal;
        Eigen::Vector3d u = to_vec(trace(txHt));
        if (u.norm() <= tol) return H4Class::orthotropic;
        Eigen::Vector3d u2 = to_vec(trace(cross(ts, sym2_from_mat(Ht * Ht))));
        if (u.cross(u2).norm() <= tol) return H4Class::monoclinic;
        return H4Class::triclinic;
    }

    if (norm(trace(cross(h, ts))) <= tol) return H4Class::tetragonal;

    HarmTensor Hn(h, tol);
    Eigen::Matrix3d D2 = d2(Hn);
    if (norm(cross(sym2_from_mat(Ht), ts)) <= tol &&
        norm(cross(sym2_from_mat(D2), ts)) <= tol)
        return H4Class::trigonal;

    Eigen::Matrix3d c3 = contract22(h, D2);
    switch (hc) {
        case H4Class::orthotropic:
        case H4Class::monoclinic:
        case H4Class::triclinic: {
            // G_H is carried by (d2, c3, c4)
            Eigen::Matrix3d c4 = contract22(h, c3);
            return from_family(classify_family({D2, c3, c4, t}, tol));
        }
        case H4Class::transversely_isotropic:
        case H4Class::tetragonal:
        case H4Class::trigonal: {
            FamilyClass pc = classify_family({t, D2}, tol);
            if (pc == FamilyClass::orthotropic)
                return from_family(classify_family({t, D2, c3, Ht}, tol));
            if (pc == FamilyClass::monoclinic) {
                Eigen::Matrix3d tD2 = 0.5 * (t * D2 + D2 * t);
                return from_family(classify_family({t, D2, c3, Ht, contract22(h, tD2)}, tol));
            }
            return hc; // t shares the axis of d2: the pair inherits H's class
        }
        default:
            return H4Class::triclinic; // not reachable
    }
}

SymTensor normal_form_from_params(H4Class cls, const Harm4Params& p) {
    Harm4Params s; // shaped copy
    switch (cls) {
        case H4Class::isotropic:
            break;
        case H4Class::cubic:
            s.L1 = s.L2 = s.L3 = p.L1;
            break;
        case H4Class::transversely_isotropic:
            s.L1 = s.L2 = 4.0 * p.L1;
            s.L3 = -p.L1;
            break;
        case H4Class::tetragonal:
            s.L1 = s.L2 = p.L1;
            s.L3 = p.L3;
            s.Z2 = p.Z2;
            break;
        case H4Class::trigonal:
            s.L1 = s.L2 = -4.0 * p.L3;
            s.L3 = p.L3;
            s.X1 = p.X1;
            s.X2 = -p.X1;
            s.Y1 = p.Y1;
            break;
        case H4Class::orthotropic:
            s.L1 = p.L1; s.L2 = p.L2; s.L3 = p.L3;
            break;
        case H4Class::monoclinic:
            s.L1 = p.L1; s.L2 = p.L2; s.L3 = p.L3;
            s.Z1 = p.Z1; s.Z2 = p.Z2;
            break;
        case H4Class::triclinic:
            s = p;
            break;
    }
    return s.tensor();
}

namespace {

std::vector<Rotation> class_generators(H4Class cls) {
    const double pi = std::acos(-1.0);
    Eigen::Vector3d ez(0, 0, 1), ex(1, 0, 0);
    switch (cls) {
        case H4Class::isotropic:
            return {random_rotation(std::uint64_t{99})};
        case H4Class::cubic:
            return {Rotation::axis_angle(ez, pi / 2), Rotation::axis_angle(ex, pi / 2)};
        case H4Class::transversely_isotropic:
            return {Rotation::axis_angle(ez, 0.7331), Rotation::axis_angle(ex, pi)};
        case H4Class::tetragonal:
            return {Rotation::axis_angle(ez, pi / 2)};
        case H4Class::trigonal:
            return {Rotation::axis_angle(ez, 2 * pi / 3)};
        case H4Class::orthotropic:
            return {Rotation::axis_angle(ez, pi), Rotation::axis_angle(ex, pi)};
        case H4Class::monoclinic:
            return {Rotation::axis_angle(ez, pi)};
        case H4Class::triclinic:
            return {};
    }
    return {};
}

// a rotation inside a strictly larger closed subgroup which must not fix a
// tensor of exactly this class (genericity witness)
std::vector<Rotation> supergroup_witness(H4Class cls) {
    const double pi = std::acos(-1.0);
    Eigen::Vector3d ez(0, 0, 1), ex(1, 0, 0);
    switch (cls) {
        case H4Class::isotropic: return {};
        case H4Class::cubic: return {Rotation::axis_angle({1, 2, 3}, 0.9)};
        case H4Class::transversely_isotropic: return {Rotation::axis_angle(ex, 0.9)};
        case H4Class::tetragonal: return {Rotation::axis_angle(ez, 0.9)};
        case H4Class::trigonal: return {Rotation::axis_angle(ez, 0.9)};
        case H4Class::orthotropic: return {Rotation::axis_angle(ez, pi / 2)};
        case H4Class::monoclinic: return {Rotation::axis_angle(ex, pi)};
        case H4Class::triclinic: return {Rotation::axis_angle(ez, pi)};
    }
    return {};
}

} // namespace

SymTensor generate_normal_form(H4Class cls, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::uniform_real_distribution<double> sign01(0.0, 1.0);
    auto draw = [&] { return (sign01(rng) < 0.5 ? -1.0 : 1.0) * mag(rng); };

    for (int attempt = 0; attempt < 64; ++attempt) {
        Harm4Params p;
        switch (cls) {
            case H4Class::isotropic: break;
            case H4Class::cubic: p.L1 = draw(); break;
            case H4Class::transversely_isotropic: p.L1 = draw(); break;
            case H4Class::tetragonal: p.L1 = draw(); p.L3 = draw(); p.Z2 = draw(); break;
            case H4Class::trigonal: p.L3 = draw(); p.X1 = draw(); p.Y1 = draw(); break;
            case H4Class::orthotropic: p.L1 = draw(); p.L2 = draw(); p.L3 = draw(); break;
            case H4Class::monoclinic:
                p.L1 = draw(); p.L2 = draw(); p.L3 = draw(); p.Z1 = draw(); p.Z2 = draw();
                break;
            case H4Class::triclinic:
                p.L1 = draw(); p.L2 = draw(); p.L3 = draw();
                p.X1 = draw(); p.X2 = draw(); p.Y1 = draw(); p.Y2 = draw();
                p.Z1 = draw(); p.Z2 = draw();
                break;
        }
        SymTensor h = normal_form_from_params(cls, p);

        bool ok = true;
        double scale = std::max(norm(h), 1e-300);
        for (const Rotation& g : class_generators(cls))
            if (norm(rotate(g, h) - h) > 1e-12 * scale) { ok = false; break; }
        for (const Rotation& g : supergroup_witness(cls))
            if (norm(rotate(g, h) - h) <= 1e-6 * scale) { ok = false; break; }
        if (!ok) continue;
        try {
            if (classify_h4(h, 1e-8) != cls) continue;
        } catch (const std::invalid_argument&) {
            continue;
        }
        return h;
    }
    throw std::runtime_error("generate_normal_form: exhausted retries (degenerate parameters)");
}

} // namespace elasym
