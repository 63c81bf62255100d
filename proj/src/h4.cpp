#include "elasym/h4.hpp"

#include <cmath>
#include <stdexcept>

namespace elasym {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Eigen::Matrix3d tr13(const DenseTensor& t4) {
    Eigen::Matrix3d r = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t4.a[k + 3 * i + 9 * k + 27 * j];
            r(i, j) = s;
        }
    return r;
}

} // namespace

SymTensor Harm4Params::tensor() const {
    SymTensor h(4);
    h.at(4, 0, 0) = L2 + L3;
    h.at(0, 4, 0) = L1 + L3;
    h.at(0, 0, 4) = L1 + L2;
    h.at(2, 2, 0) = -L3;
    h.at(2, 0, 2) = -L2;
    h.at(0, 2, 2) = -L1;
    h.at(2, 1, 1) = -X1;
    h.at(0, 3, 1) = -X2;
    h.at(0, 1, 3) = X1 + X2;
    h.at(3, 0, 1) = Y1 + Y2;
    h.at(1, 2, 1) = -Y1;
    h.at(1, 0, 3) = -Y2;
    h.at(3, 1, 0) = -Z2;
    h.at(1, 3, 0) = Z1 + Z2;
    h.at(1, 1, 2) = -Z1;
    return h;
}

Matrix6d Harm4Params::kelvin() const {
    Eigen::Matrix3d A, B, C;
    A << L2 + L3, -L3, -L2,
         -L3, L3 + L1, -L1,
         -L2, -L1, L2 + L1;
    B << -X1, Y1 + Y2, -Z2,
         -X2, -Y1, Z1 + Z2,
         X1 + X2, -Y2, -Z1;
    C << -L1, -Z1, -Y1,
         -Z1, -L2, -X1,
         -Y1, -X1, -L3;
    Matrix6d K;
    K.topLeftCorner<3, 3>() = A;
    K.topRightCorner<3, 3>() = kSqrt2 * B;
    K.bottomLeftCorner<3, 3>() = kSqrt2 * B.transpose();
    K.bottomRightCorner<3, 3>() = 2.0 * C;
    return K;
}

Harm4Params Harm4Params::from_tensor(const SymTensor& h, double tol) {
    if (h.order() != 4) throw std::invalid_argument("Harm4Params: order-4 tensor expected");
    if (!is_harmonic(h, tol)) throw std::invalid_argument("Harm4Params: tensor is not harmonic");
    Harm4Params p;
    p.L1 = -h.at(0, 2, 2);
    p.L2 = -h.at(2, 0, 2);
    p.L3 = -h.at(2, 2, 0);
    p.X1 = -h.at(2, 1, 1);
    p.X2 = -h.at(0, 3, 1);
    p.Y1 = -h.at(1, 2, 1);
    p.Y2 = -h.at(1, 0, 3);
    p.Z1 = -h.at(1, 1, 2);
    p.Z2 = -h.at(3, 1, 0);
    return p;
}

Eigen::Matrix3d contract22(const SymTensor& h4, const Eigen::Matrix3d& a) {
    if (h4.order() != 4) throw std::invalid_argument("contract22: order-4 tensor expected");
    Eigen::Matrix3d r;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    s += h4.component({i, j, k, l}) * a(k, l);
            r(i, j) = s;
            r(j, i) = s;
        }
    return r;
}

Eigen::Matrix3d d2(const HarmTensor& H) {
    DenseTensor hd = expand(H.tensor());
    return tr13(contract(hd, hd, 2));
}

Eigen::Matrix3d d3(const HarmTensor& H) {
    DenseTensor hd = expand(H.tensor());
    DenseTensor h2 = contract(hd, hd, 2);
    return tr13(contract(hd, h2, 2));
}

Eigen::Matrix3d ck(const HarmTensor& H, int k) {
    if (k < 3 || k > 5) throw std::invalid_argument("ck: k must be 3, 4 or 5");
    Eigen::Matrix3d c = d2(H);
    for (int i = 2; i < k; ++i) c = contract22(H.tensor(), c);
    return c;
}

BoehlerSet boehler(const HarmTensor& H) {
    const SymTensor& h = H.tensor();
    BoehlerSet s;
    Eigen::Matrix3d D2 = d2(H);
    Eigen::Matrix3d D22 = D2 * D2;
    Eigen::Matrix3d c3 = contract22(h, D2);
    Eigen::Matrix3d c4 = contract22(h, c3);
    Eigen::Matrix3d Hd22 = contract22(h, D22);   // H <2> d2^2
    Eigen::Matrix3d H2d22 = contract22(h, Hd22); // H^2 <2> d2^2

    s.d[0] = D2;
    s.d[1] = d3(H);
    s.d[2] = D22;
    s.d[3] = D2 * c3;
    s.d[4] = D22 * D2;
    s.d[5] = D22 * c3;
    s.d[6] = D22 * c4;
    s.d[7] = D22 * Hd22;
    s.d[8] = D22 * H2d22;
    for (int i = 0; i < 9; ++i) s.J[i] = s.d[i].trace();
    return s;
}

double boehler_degree6_residual(const HarmTensor& H) {
    BoehlerSet b = boehler(H);
    Eigen::Matrix3d D3 = b.dk(3);
    double J2 = b.Jk(2), J3 = b.Jk(3), J4 = b.Jk(4), J6 = b.Jk(6);
    return 240.0 * J6 + 39.0 * J2 * J2 * J2 + 190.0 * J3 * J3 - 198.0 * J2 * J4
         - 540.0 * (D3 * D3).trace();
}

namespace {

struct BasisCtx {
    SymTensor q;
    SymTensor H;
    DenseTensor Hd, H2d, H3d, H4d;
    Eigen::Matrix3d d2m, d22m, d3m, c3m, c4m, c5m;
    SymTensor H2s, H3s, H4s;       // order 4
    SymTensor HH6, H2H6, H2H26;    // order 6
    SymTensor Hd22, H2d22;         // order 4
    SymTensor d2s, d22s, c3s, c4s, c5s, c32s; // order-2 SymTensor views
};

BasisCtx make_ctx(const HarmTensor& H) {
    BasisCtx c;
    c.q = SymTensor::metric();
    c.H = H.tensor();
    c.Hd = expand(c.H);
    c.H2d = contract(c.Hd, c.Hd, 2);
    c.H3d = contract(c.Hd, c.H2d, 2);
    c.H4d = contract(c.Hd, c.H3d, 2);
    c.d2m = tr13(c.H2d);
    c.d22m = c.d2m * c.d2m;
    c.d3m = tr13(c.H3d);
    c.c3m = contract22(c.H, c.d2m);
    c.c4m = contract22(c.H, c.c3m);
    c.c5m = contract22(c.H, c.c4m);
    c.H2s = symmetrize(c.H2d);
    c.H3s = symmetrize(c.H3d);
    c.H4s = symmetrize(c.H4d);
    c.HH6 = symmetrize(contract(c.Hd, c.Hd, 1));
    c.H2H6 = symmetrize(contract(c.H2d, c.Hd, 1));
    c.H2H26 = symmetrize(contract(c.H2d, c.H2d, 1));
    DenseTensor d22d = expand(sym2_from_mat(c.d22m));
    c.Hd22 = symmetrize(contract(c.Hd, d22d, 1));
    c.H2d22 = symmetrize(contract(c.H2d, d22d, 1));
    c.d2s = sym2_from_mat(c.d2m);
    c.d22s = sym2_from_mat(c.d22m);
    c.c3s = sym2_from_mat(c.c3m);
    c.c4s = sym2_from_mat(c.c4m);
    c.c5s = sym2_from_mat(c.c5m);
    c.c32s = sym2_from_mat(c.c3m * c.c3m);
    return c;
}

using Evaluator = SymTensor (*)(const BasisCtx&);

struct BasisRow {
    const char* id;
    int degree;
    int order;
    Evaluator eval;
};

SymTensor inv(double v) { return SymTensor::scalar(v); }
SymTensor vec(const Eigen::Vector3d& v) { return sym1_from_vec(v); }
SymTensor m2(const Eigen::Matrix3d& m) { return sym2_from_mat(m); }

// Table layout of the 70-generator minimal covariant basis, with q as the
// degree-0 entry.
const BasisRow kBasis[] = {
    {"q", 0, 2, [](const BasisCtx& c) { return c.q; }},
    // invariants
    {"I2", 2, 0, [](const BasisCtx& c) { return inv(c.d2m.trace()); }},
    {"I3", 3, 0, [](const BasisCtx& c) { return inv(c.d3m.trace()); }},
    {"I4", 4, 0, [](const BasisCtx& c) { return inv(c.d22m.trace()); }},
    {"I5", 5, 0, [](const BasisCtx& c) { return inv((c.d2m * c.d3m).trace()); }},
    {"I6", 6, 0, [](const BasisCtx& c) { return inv((c.d22m * c.d2m).trace()); }},
    {"I7", 7, 0, [](const BasisCtx& c) { return inv((c.d22m * c.d3m).trace()); }},
    {"I8", 8, 0, [](const BasisCtx& c) { return inv((c.d2m * c.d3m * c.d3m).trace()); }},
    {"I9", 9, 0, [](const BasisCtx& c) { return inv((c.d3m * c.d3m * c.d3m).trace()); }},
    {"I10", 10, 0, [](const BasisCtx& c) { return inv((c.d22m * c.d3m * c.d3m).trace()); }},
    // order 1
    {"v5", 5, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d2m * c.c3m)); }},
    {"v6", 6, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d2m * c.c4m)); }},
    {"v7a", 7, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d22m * c.c3m)); }},
    {"v7b", 7, 1, [](const BasisCtx& c) { return vec(eps_contract(c.c4m * c.c3m)); }},
    {"v8a", 8, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d2m * c.c3m * c.c3m)); }},
    {"v8b", 8, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d22m * c.c4m)); }},
    {"v9a", 9, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d2m * c.c4m * c.c3m)); }},
    {"v9b", 9, 1, [](const BasisCtx& c) { return vec(eps_contract(c.c3m * c.d2m * c.c4m)); }},
    {"v9c", 9, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d2m * c.c3m * c.c4m)); }},
    {"v10a", 10, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d22m * c.c3m * c.c3m)); }},
    {"v10b", 10, 1, [](const BasisCtx& c) { return vec(eps_contract(c.c3m * c.c3m * c.c4m)); }},
    {"v11a", 11, 1, [](const BasisCtx& c) { return vec(eps_contract(c.c3m * c.c4m * c.c4m)); }},
    {"v11b", 11, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d22m * c.c3m * c.c4m)); }},
    {"v12", 12, 1, [](const BasisCtx& c) { return vec(eps_contract(c.d2m * c.c3m * c.c3m * c.c4m)); }},
    // order 2
    {"d2", 2, 2, [](const BasisCtx& c) { return c.d2s; }},
    {"c3", 3, 2, [](const BasisCtx& c) { return c.c3s; }},
    {"c4", 4, 2, [](const BasisCtx& c) { return c.c4s; }},
    {"d2^2", 4, 2, [](const BasisCtx& c) { return c.d22s; }},
    {"c5", 5, 2, [](const BasisCtx& c) { return c.c5s; }},
    {"(d2 c3)^s", 5, 2, [](const BasisCtx& c) { return m2(c.d2m * c.c3m); }},
    {"(d2 c4)^s", 6, 2, [](const BasisCtx& c) { return m2(c.d2m * c.c4m); }},
    {"c3^2", 6, 2, [](const BasisCtx& c) { return c.c32s; }},
    {"(d2^2 c3)^s", 7, 2, [](const BasisCtx& c) { return m2(c.d22m * c.c3m); }},
    {"(c4 c3)^s", 7, 2, [](const BasisCtx& c) { return m2(c.c4m * c.c3m); }},
    {"(d2 c3^2)^s", 8, 2, [](const BasisCtx& c) { return m2(c.d2m * c.c3m * c.c3m); }},
    {"c4^2", 8, 2, [](const BasisCtx& c) { return m2(c.c4m * c.c4m); }},
    {"(d2^2 c5)^s", 9, 2, [](const BasisCtx& c) { return m2(c.d22m * c.c5m); }},
    // order 3
    {"tr(H x d2)", 3, 3, [](const BasisCtx& c) { return trace(cross(c.H, c.d2s)); }},
    {"tr(H x c3)", 4, 3, [](const BasisCtx& c) { return trace(cross(c.H, c.c3s)); }},
    {"d2 x c3", 5, 3, [](const BasisCtx& c) { return cross(c.d2s, c.c3s); }},
    {"tr(H x d2^2)", 5, 3, [](const BasisCtx& c) { return trace(cross(c.H, c.d22s)); }},
    {"d2 x d2^2", 6, 3, [](const BasisCtx& c) { return cross(c.d2s, c.d22s); }},
    {"d2 x c4", 6, 3, [](const BasisCtx& c) { return cross(c.d2s, c.c4s); }},
    {"tr(H x c5)", 6, 3, [](const BasisCtx& c) { return trace(cross(c.H, c.c5s)); }},
    {"d2^2 x c3", 7, 3, [](const BasisCtx& c) { return cross(c.d22s, c.c3s); }},
    {"c3 x c4", 7, 3, [](const BasisCtx& c) { return cross(c.c3s, c.c4s); }},
    {"d2 x c5", 7, 3, [](const BasisCtx& c) { return cross(c.d2s, c.c5s); }},
    {"d2 x c3^2", 8, 3, [](const BasisCtx& c) { return cross(c.d2s, c.c32s); }},
    {"c3 x c5", 8, 3, [](const BasisCtx& c) { return cross(c.c3s, c.c5s); }},
    // order 4
    {"H", 1, 4, [](const BasisCtx& c) { return c.H; }},
    {"(H^2)^s", 2, 4, [](const BasisCtx& c) { return c.H2s; }},
    {"(H^3)^s", 3, 4, [](const BasisCtx& c) { return c.H3s; }},
    {"(H^4)^s", 4, 4, [](const BasisCtx& c) { return c.H4s; }},
    {"(H . d2^2)^s", 5, 4, [](const BasisCtx& c) { return c.Hd22; }},
    {"(H^2 . d2^2)^s", 6, 4, [](const BasisCtx& c) { return c.H2d22; }},
    // order 5
    {"H x d2", 3, 5, [](const BasisCtx& c) { return cross(c.H, c.d2s); }},
    {"H x c3", 4, 5, [](const BasisCtx& c) { return cross(c.H, c.c3s); }},
    {"(H^2)^s x d2", 4, 5, [](const BasisCtx& c) { return cross(c.H2s, c.d2s); }},
    {"H x d2^2", 5, 5, [](const BasisCtx& c) { return cross(c.H, c.d22s); }},
    {"H x c4", 5, 5, [](const BasisCtx& c) { return cross(c.H, c.c4s); }},
    {"(H^2)^s x c3", 5, 5, [](const BasisCtx& c) { return cross(c.H2s, c.c3s); }},
    {"H x c5", 6, 5, [](const BasisCtx& c) { return cross(c.H, c.c5s); }},
    // order 6
    {"(H . H)^s", 2, 6, [](const BasisCtx& c) { return c.HH6; }},
    {"(H^2 . H)^s", 3, 6, [](const BasisCtx& c) { return c.H2H6; }},
    {"(H^2 . H^2)^s", 4, 6, [](const BasisCtx& c) { return c.H2H26; }},
    // order 7
    {"H x (H^2)^s", 3, 7, [](const BasisCtx& c) { return cross(c.H, c.H2s); }},
    {"H x (H^3)^s", 4, 7, [](const BasisCtx& c) { return cross(c.H, c.H3s); }},
    {"(H^2)^s x (H^3)^s", 5, 7, [](const BasisCtx& c) { return cross(c.H2s, c.H3s); }},
    // order 9
    {"(H . H)^s x H", 3, 9, [](const BasisCtx& c) { return cross(c.HH6, c.H); }},
    {"(H . H)^s x (H^2)^s", 4, 9, [](const BasisCtx& c) { return cross(c.HH6, c.H2s); }},
};

constexpr int kBasisSize = static_cast<int>(sizeof(kBasis) / sizeof(kBasis[0]));
static_assert(kBasisSize == 70, "covariant basis must have 70 entries");

} // namespace

std::vector<CovariantBasisEntry> eval_basis(const HarmTensor& H) {
    BasisCtx c = make_ctx(H);
    std::vector<CovariantBasisEntry> out;
    out.reserve(kBasisSize);
    for (const BasisRow& row : kBasis)
        out.push_back({row.id, row.degree, row.order, row.eval(c)});
    return out;
}

std::vector<std::array<int, 3>> basis_census() {
    std::vector<std::array<int, 3>> rows;
    for (const BasisRow& row : kBasis) {
        bool found = false;
        for (auto& r : rows)
            if (r[0] == row.degree && r[1] == row.order) {
                ++r[2];
                found = true;
            }
        if (!found) rows.push_back({row.degree, row.order, 1});
    }
    return rows;
}

std::pair<int, int> cov_space_dims(const HarmTensor& H, double tol) {
    if (tol <= 0) throw std::invalid_argument("cov_space_dims: tol must be positive");
    double n = norm(H.tensor());
    HarmTensor Hn = (n > 0) ? HarmTensor((1.0 / n) * H.tensor()) : H;
    auto entries = eval_basis(Hn);

    // entries that vanish to roundoff on the unit-normalized input would
    // otherwise feed a junk sigma_max into the relative rank threshold
    const double floor = 1e-11;
    std::vector<Eigen::Vector3d> vecs;
    std::vector<Eigen::Matrix3d> mats;
    for (const auto& e : entries) {
        if (e.order == 1) {
            Eigen::Vector3d v = to_vec(e.value);
            vecs.push_back(v.norm() > floor ? v : Eigen::Vector3d::Zero());
        }
        if (e.order == 2) {
            Eigen::Matrix3d m = to_mat(e.value);
            mats.push_back(m.norm() > floor ? m : Eigen::Matrix3d::Zero());
        }
    }

    auto rank_of = [tol](const Eigen::MatrixXd& m) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        if (smax <= 0) return 0;
        int r = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > tol * smax) ++r;
        return r;
    };

    Eigen::MatrixXd m1(static_cast<int>(vecs.size()), 3);
    for (size_t i = 0; i < vecs.size(); ++i) m1.row(static_cast<int>(i)) = vecs[i].transpose();
    int dim1 = rank_of(m1);

    // order-2 rows: the Table entries plus symmetric products of the
    // order-1 entries; flattened with sqrt(2) shear scaling so row norms
    // equal Frobenius norms
    auto flatten = [](const Eigen::Matrix3d& a) {
        Eigen::Matrix<double, 6, 1> r;
        r << a(0, 0), a(1, 1), a(2, 2), kSqrt2 * a(1, 2), kSqrt2 * a(0, 2), kSqrt2 * a(0, 1);
        return r;
    };
    std::vector<Eigen::Matrix<double, 6, 1>> rows;
    for (const auto& m : mats) rows.push_back(flatten(m));
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = i; j < vecs.size(); ++j) {
            Eigen::Matrix3d vv = 0.5 * (vecs[i] * vecs[j].transpose() + vecs[j] * vecs[i].transpose());
            if (vv.norm() > floor) rows.push_back(flatten(vv));
        }
    Eigen::MatrixXd m2x(static_cast<int>(rows.size()), 6);
    for (size_t i = 0; i < rows.size(); ++i) m2x.row(static_cast<int>(i)) = rows[i].transpose();
    int dim2 = rank_of(m2x);

    return {dim1, dim2};
}

} // namespace elasym
