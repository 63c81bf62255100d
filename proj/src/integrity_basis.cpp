#include <cmath>

#include "elasym/elasticity.hpp"

// The invariant integrity basis of the elasticity tensor: 15 simple
// invariants, 4 joint invariants of (a, b), 52 joint invariants of (H, a),
// the same 52 of (H, b), and 174 joint invariants of (H, a, b). Each table
// row below transcribes one generator formula; "xy" denotes the plain matrix
// product, "(xy)^s" its symmetric part, and every cross-product argument is
// symmetric by construction.

namespace elasym {

namespace {

using M3 = Eigen::Matrix3d;
using V3 = Eigen::Vector3d;

double ddot(const M3& x, const M3& y) { return x.cwiseProduct(y).sum(); }
M3 symp(const M3& m) { return 0.5 * (m + m.transpose()); }

double quad(const SymTensor& t4, const M3& x, const M3& y) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    s += t4.component({i, j, k, l}) * x(i, j) * y(k, l);
    return s;
}

double six(const DenseTensor& t6, const M3& x, const M3& y, const M3& z) {
    double s = 0.0;
    for (int f = 0; f < 729; ++f) {
        double v = t6.a[f];
        if (v == 0.0) continue;
        int d0 = f % 3, d1 = (f / 3) % 3, d2 = (f / 9) % 3;
        int d3 = (f / 27) % 3, d4 = (f / 81) % 3, d5 = (f / 243) % 3;
        s += v * x(d0, d1) * y(d2, d3) * z(d4, d5);
    }
    return s;
}

SymTensor contr3(const SymTensor& t, const SymTensor& s3) {
    return compact_symmetric(contract(expand(t), expand(s3), 3));
}

V3 vec_c2(const SymTensor& s3, const M3& x) {
    V3 v;
    for (int i = 0; i < 3; ++i) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s += s3.component({i, j, k}) * x(j, k);
        v(i) = s;
    }
    return v;
}

M3 mat_c1(const SymTensor& s3, const V3& v) {
    M3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += s3.component({i, j, k}) * v(k);
            m(i, j) = s;
        }
    return m;
}

double ddot2(const SymTensor& s2, const M3& x) { return ddot(to_mat(s2), x); }

struct Ctx {
    double lambda = 0, mu = 0;

    // covariants of H
    M3 d2, d22, d3, c3, c4, c5;
    SymTensor H, H2s, H3s, H4s, Hd22, H2d22;          // order 4
    DenseTensor HH6d, H2H6d, H2H26d;                   // order 6 (dense)
    SymTensor cv33, trHxc3, trHxd22, trHxc5;           // order 3
    SymTensor d2xc3, d2xc4, c3xc4;                     // order 3
    SymTensor cv35, cv4b5, Hxc3_5, Hxc4_5, Hxc5_5, Hxd22_5, H2sxc3_5; // order 5
    SymTensor cv37, cv47;                              // order 7
    SymTensor cv39;                                    // order 9
    V3 v5, v8a, v9a, v9b;

    // the two deviators and their products
    M3 A, B, A2, B2, AB, ABs, A2B, AB2, A2B2;
    SymTensor As, Bs, A2s, B2s, ABss;
    SymTensor axb;                                     // a x b, order 3
    SymTensor w37, w47;                                // cv37/cv47 <3> (a x b), order 4
    DenseTensor w39d;                                  // cv39 <3> (a x b), order 6
};

Ctx make_ctx(const HarmonicDecomposition& dec) {
    Ctx c;
    c.lambda = dec.lambda;
    c.mu = dec.mu;
    c.H = dec.H;

    DenseTensor Hd = expand(c.H);
    DenseTensor H2d = contract(Hd, Hd, 2);
    DenseTensor H3d = contract(Hd, H2d, 2);
    DenseTensor H4d = contract(Hd, H3d, 2);
    auto tr13 = [](const DenseTensor& t4) {
        M3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += t4.a[k + 3 * i + 9 * k + 27 * j];
                r(i, j) = s;
            }
        return r;
    };
    c.d2 = tr13(H2d);
    c.d22 = c.d2 * c.d2;
    c.d3 = tr13(H3d);
    c.c3 = contract22(c.H, c.d2);
    c.c4 = contract22(c.H, c.c3);
    c.c5 = contract22(c.H, c.c4);
    c.H2s = symmetrize(H2d);
    c.H3s = symmetrize(H3d);
    c.H4s = symmetrize(H4d);
    c.HH6d = expand(symmetrize(contract(Hd, Hd, 1)));
    c.H2H6d = expand(symmetrize(contract(H2d, Hd, 1)));
    c.H2H26d = expand(symmetrize(contract(H2d, H2d, 1)));
    DenseTensor d22d = expand(sym2_from_mat(c.d22));
    c.Hd22 = symmetrize(contract(Hd, d22d, 1));
    c.H2d22 = symmetrize(contract(H2d, d22d, 1));

    SymTensor d2s = sym2_from_mat(c.d2), d22s = sym2_from_mat(c.d22);
    SymTensor c3s = sym2_from_mat(c.c3), c4s = sym2_from_mat(c.c4), c5s = sym2_from_mat(c.c5);
    c.cv35 = cross(c.H, d2s);
    c.cv33 = trace(c.cv35);
    c.Hxc3_5 = cross(c.H, c3s);
    c.trHxc3 = trace(c.Hxc3_5);
    c.Hxd22_5 = cross(c.H, d22s);
    c.trHxd22 = trace(c.Hxd22_5);
    c.Hxc4_5 = cross(c.H, c4s);
    c.Hxc5_5 = cross(c.H, c5s);
    c.trHxc5 = trace(c.Hxc5_5);
    c.cv4b5 = cross(c.H2s, d2s);
    c.H2sxc3_5 = cross(c.H2s, c3s);
    c.d2xc3 = cross(d2s, c3s);
    c.d2xc4 = cross(d2s, c4s);
    c.c3xc4 = cross(c3s, c4s);
    c.cv37 = cross(c.H, c.H2s);
    c.cv47 = cross(c.H, c.H3s);
    c.cv39 = cross(symmetrize(contract(Hd, Hd, 1)), c.H);
    c.v5 = eps_contract(c.d2 * c.c3);
    c.v8a = eps_contract(c.d2 * c.c3 * c.c3);
    c.v9a = eps_contract(c.d2 * c.c4 * c.c3);
    c.v9b = eps_contract(c.c3 * c.d2 * c.c4);

    c.A = dec.a;
    c.B = dec.b;
    c.A2 = c.A * c.A;
    c.B2 = c.B * c.B;
    c.AB = c.A * c.B;
    c.ABs = symp(c.AB);
    c.A2B = c.A2 * c.B;
    c.AB2 = c.A * c.B2;
    c.A2B2 = c.A2 * c.B2;
    c.As = sym2_from_mat(c.A);
    c.Bs = sym2_from_mat(c.B);
    c.A2s = sym2_from_mat(c.A2);
    c.B2s = sym2_from_mat(c.B2);
    c.ABss = sym2_from_mat(c.ABs);
    c.axb = cross(c.As, c.Bs);
    c.w37 = contr3(c.cv37, c.axb);
    c.w47 = contr3(c.cv47, c.axb);
    c.w39d = expand(contr3(c.cv39, c.axb));
    return c;
}

// One side of the 52-row joint-invariant table: X stands for a or b.
struct Side {
    M3 X, X2;
    SymTensor Xs, X2s;
    SymTensor x2xx; // X^2 x X, order 3
};

Side make_side(const M3& x) {
    Side s;
    s.X = x;
    s.X2 = x * x;
    s.Xs = sym2_from_mat(s.X);
    s.X2s = sym2_from_mat(s.X2);
    s.x2xx = cross(s.X2s, s.Xs);
    return s;
}

using JaFn = double (*)(const Ctx&, const Side&);

struct JaRow {
    int dh, dx;
    JaFn f;
};

const JaRow kJa[] = {
    /* ja1  */ {2, 1, [](const Ctx& c, const Side& s) { return ddot(s.X, c.d2); }},
    /* ja2  */ {1, 2, [](const Ctx& c, const Side& s) { return quad(c.H, s.X, s.X); }},
    /* ja3  */ {2, 2, [](const Ctx& c, const Side& s) { return ddot(s.X2, c.d2); }},
    /* ja4  */ {3, 1, [](const Ctx& c, const Side& s) { return ddot(s.X, c.d3); }},
    /* ja5  */ {1, 3, [](const Ctx& c, const Side& s) { return quad(c.H, s.X, s.X2); }},
    /* ja6  */ {2, 2, [](const Ctx& c, const Side& s) { return quad(c.H2s, s.X, s.X); }},
    /* ja7  */ {1, 4, [](const Ctx& c, const Side& s) { return quad(c.H, s.X2, s.X2); }},
    /* ja8  */ {2, 3, [](const Ctx& c, const Side& s) { return quad(c.H2s, s.X, s.X2); }},
    /* ja9  */ {2, 3, [](const Ctx& c, const Side& s) { return six(c.HH6d, s.X, s.X, s.X); }},
    /* ja10 */ {3, 2, [](const Ctx& c, const Side& s) { return quad(c.H3s, s.X, s.X); }},
    /* ja11 */ {3, 2, [](const Ctx& c, const Side& s) { return ddot(s.X2, c.d3); }},
    /* ja12 */ {4, 1, [](const Ctx& c, const Side& s) { return ddot(s.X, c.d22); }},
    /* ja13 */ {4, 1, [](const Ctx& c, const Side& s) { return quad(c.H2s, s.X, c.d2); }},
    /* ja14 */ {2, 4, [](const Ctx& c, const Side& s) { return quad(c.H2s, s.X2, s.X2); }},
    /* ja15 */ {2, 4, [](const Ctx& c, const Side& s) { return six(c.HH6d, s.X2, s.X, s.X); }},
    /* ja16 */ {3, 3, [](const Ctx& c, const Side& s) { return six(c.H2H6d, s.X, s.X, s.X); }},
    /* ja17 */ {3, 3, [](const Ctx& c, const Side& s) { return quad(c.H3s, s.X, s.X2); }},
    /* ja18 */ {3, 3, [](const Ctx& c, const Side& s) { return dot(c.cv33, s.x2xx); }},
    /* ja19 */ {4, 2, [](const Ctx& c, const Side& s) { return ddot(c.d22, s.X2); }},
    /* ja20 */ {4, 2, [](const Ctx& c, const Side& s) { return quad(c.H4s, s.X, s.X); }},
    /* ja21 */ {4, 2, [](const Ctx& c, const Side& s) { return ddot(s.X2, c.c4); }},
    /* ja22 */ {5, 1, [](const Ctx& c, const Side& s) { return ddot(s.X, c.d2 * c.d3); }},
    /* ja23 */ {5, 1, [](const Ctx& c, const Side& s) { return quad(c.H3s, s.X, c.d2); }},
    /* ja24 */ {2, 5, [](const Ctx& c, const Side& s) { return six(c.HH6d, s.X, s.X2, s.X2); }},
    /* ja25 */ {3, 4, [](const Ctx& c, const Side& s) { return ddot2(contr3(c.cv35, s.x2xx), s.X); }},
    /* ja26 */ {3, 4, [](const Ctx& c, const Side& s) { return six(c.H2H6d, s.X, s.X, s.X2); }},
    /* ja27 */ {4, 3, [](const Ctx& c, const Side& s) { return quad(c.H4s, s.X, s.X2); }},
    /* ja28 */ {4, 3, [](const Ctx& c, const Side& s) { return dot(c.trHxc3, s.x2xx); }},
    /* ja29 */ {4, 3, [](const Ctx& c, const Side& s) { return six(c.H2H26d, s.X, s.X, s.X); }},
    /* ja30 */ {5, 2, [](const Ctx& c, const Side& s) { return quad(c.Hd22, s.X, s.X); }},
    /* ja31 */ {5, 2, [](const Ctx& c, const Side& s) { return ddot(c.c5, s.X2); }},
    /* ja32 */ {5, 2, [](const Ctx& c, const Side& s) { return ddot(c.d2 * c.c3, s.X2); }},
    /* ja33 */ {6, 1, [](const Ctx& c, const Side& s) { return ddot(c.d2 * c.c4, s.X); }},
    /* ja34 */ {6, 1, [](const Ctx& c, const Side& s) { return ddot(c.c3 * c.c3, s.X); }},
    /* ja35 */ {7, 1, [](const Ctx& c, const Side& s) { return ddot(c.d22 * c.c3, s.X); }},
    /* ja36 */ {7, 1, [](const Ctx& c, const Side& s) { return ddot(c.c4 * c.c3, s.X); }},
    /* ja37 */ {6, 2, [](const Ctx& c, const Side& s) { return ddot(c.d2 * c.c4, s.X2); }},
    /* ja38 */ {6, 2, [](const Ctx& c, const Side& s) { return ddot(c.c3 * c.c3, s.X2); }},
    /* ja39 */ {6, 2, [](const Ctx& c, const Side& s) { return quad(c.H2d22, s.X, s.X); }},
    /* ja40 */ {5, 3, [](const Ctx& c, const Side& s) { return dot(c.trHxd22, s.x2xx); }},
    /* ja41 */ {5, 3, [](const Ctx& c, const Side& s) { return quad(c.Hd22, s.X, s.X2); }},
    /* ja42 */ {4, 4, [](const Ctx& c, const Side& s) { return ddot2(contr3(c.cv4b5, s.x2xx), s.X); }},
    /* ja43 */ {4, 4, [](const Ctx& c, const Side& s) { return six(c.H2H26d, s.X, s.X, s.X2); }},
    /* ja44 */ {3, 5, [](const Ctx& c, const Side& s) { return six(c.H2H6d, s.X2, s.X2, s.X); }},
    /* ja45 */ {6, 3, [](const Ctx& c, const Side& s) {
        V3 u = vec_c2(c.cv33, s.X);
        return u.dot(s.X * u);
    }},
    /* ja46 */ {7, 2, [](const Ctx& c, const Side& s) { return ddot(c.c4 * c.c3, s.X2); }},
    /* ja47 */ {7, 2, [](const Ctx& c, const Side& s) { return ddot(c.d22 * c.c3, s.X2); }},
    /* ja48 */ {8, 1, [](const Ctx& c, const Side& s) { return ddot(c.d2 * c.c3 * c.c3, s.X); }},
    /* ja49 */ {8, 1, [](const Ctx& c, const Side& s) { return ddot(c.c4 * c.c4, s.X); }},
    /* ja50 */ {8, 2, [](const Ctx& c, const Side& s) { return ddot(c.c4 * c.c4, s.X2); }},
    /* ja51 */ {9, 1, [](const Ctx& c, const Side& s) { return ddot(c.d22 * c.c5, s.X); }},
    /* ja52 */ {10, 1, [](const Ctx& c, const Side& s) { return c.v5.dot(s.X * c.v5); }},
};
static_assert(sizeof(kJa) / sizeof(kJa[0]) == 52);

using JiFn = double (*)(const Ctx&);

struct JiRow {
    int dh, da, db;
    JiFn f;
};

const JiRow kJi[] = {
    /* Ji1   */ {1, 1, 1, [](const Ctx& c) { return quad(c.H, c.A, c.B); }},
    /* Ji2   */ {1, 1, 2, [](const Ctx& c) { return quad(c.H, c.A, c.B2); }},
    /* Ji3   */ {1, 1, 2, [](const Ctx& c) { return quad(c.H, c.B, c.AB); }},
    /* Ji4   */ {1, 2, 1, [](const Ctx& c) { return quad(c.H, c.B, c.A2); }},
    /* Ji5   */ {1, 2, 1, [](const Ctx& c) { return quad(c.H, c.A, c.AB); }},
    /* Ji6   */ {2, 1, 1, [](const Ctx& c) { return ddot(c.A, c.d2 * c.B); }},
    /* Ji7   */ {2, 1, 1, [](const Ctx& c) { return quad(c.H2s, c.A, c.B); }},
    /* Ji8   */ {1, 1, 3, [](const Ctx& c) { return quad(c.H, c.B2, c.AB); }},
    /* Ji9   */ {1, 1, 3, [](const Ctx& c) { return quad(c.H, c.B, c.AB2); }},
    /* Ji10  */ {1, 2, 2, [](const Ctx& c) { return quad(c.H, c.A2, c.B2); }},
    /* Ji11  */ {1, 2, 2, [](const Ctx& c) { return quad(c.H, c.B, c.A2B); }},
    /* Ji12  */ {1, 2, 2, [](const Ctx& c) { return quad(c.H, c.AB, c.AB); }},
    /* Ji13  */ {1, 3, 1, [](const Ctx& c) { return quad(c.H, c.A2, c.AB); }},
    /* Ji14  */ {1, 3, 1, [](const Ctx& c) { return quad(c.H, c.A, c.A2B); }},
    /* Ji15  */ {2, 1, 2, [](const Ctx& c) { return quad(c.H2s, c.A, c.B2); }},
    /* Ji16  */ {2, 1, 2, [](const Ctx& c) { return six(c.HH6d, c.A, c.B, c.B); }},
    /* Ji17  */ {2, 2, 1, [](const Ctx& c) { return six(c.HH6d, c.B, c.A, c.A); }},
    /* Ji18  */ {2, 1, 2, [](const Ctx& c) { return ddot(c.A, c.B2 * c.d2); }},
    /* Ji19  */ {2, 2, 1, [](const Ctx& c) { return ddot(c.A2, c.B * c.d2); }},
    /* Ji20  */ {2, 2, 1, [](const Ctx& c) { return quad(c.H2s, c.B, c.A2); }},
    /* Ji21  */ {2, 2, 1, [](const Ctx& c) { return quad(c.H2s, c.A, c.AB); }},
    /* Ji22  */ {3, 1, 1, [](const Ctx& c) { return quad(c.H3s, c.A, c.B); }},
    /* Ji23  */ {3, 1, 1, [](const Ctx& c) { return ddot(c.AB, c.d3); }},
    /* Ji24  */ {2, 1, 2, [](const Ctx& c) { return quad(c.H2s, c.B, c.AB); }},
    /* Ji25  */ {3, 1, 1, [](const Ctx& c) { return dot(c.cv33, c.axb); }},
    /* Ji26  */ {1, 1, 4, [](const Ctx& c) { return quad(c.H, c.B2, c.AB2); }},
    /* Ji27  */ {1, 2, 3, [](const Ctx& c) { return quad(c.H, c.B, c.A2B2); }},
    /* Ji28  */ {1, 2, 3, [](const Ctx& c) { return quad(c.H, c.AB, c.AB2); }},
    /* Ji29  */ {1, 3, 2, [](const Ctx& c) { return quad(c.H, c.AB, c.A2B); }},
    /* Ji30  */ {1, 3, 2, [](const Ctx& c) { return quad(c.H, c.A, c.A2B2); }},
    /* Ji31  */ {1, 4, 1, [](const Ctx& c) { return quad(c.H, c.A2, c.A2B); }},
    /* Ji32  */ {2, 1, 3, [](const Ctx& c) { return quad(c.H2s, c.B, c.AB2); }},
    /* Ji33  */ {2, 1, 3, [](const Ctx& c) { return quad(c.H2s, c.B2, c.AB); }},
    /* Ji34  */ {2, 2, 2, [](const Ctx& c) { return quad(c.H2s, c.B, c.A2B); }},
    /* Ji35  */ {2, 2, 2, [](const Ctx& c) { return quad(c.H2s, c.AB, c.AB); }},
    /* Ji36  */ {2, 2, 2, [](const Ctx& c) { return quad(c.H2s, c.A2, c.B2); }},
    /* Ji37  */ {2, 3, 1, [](const Ctx& c) { return quad(c.H2s, c.A2, c.AB); }},
    /* Ji38  */ {2, 3, 1, [](const Ctx& c) { return quad(c.H2s, c.A, c.A2B); }},
    /* Ji39  */ {2, 1, 3, [](const Ctx& c) { return six(c.HH6d, c.B2, c.A, c.B); }},
    /* Ji40  */ {2, 1, 3, [](const Ctx& c) { return six(c.HH6d, c.B, c.B, c.AB); }},
    /* Ji41  */ {2, 2, 2, [](const Ctx& c) { return six(c.HH6d, c.B, c.B, c.A2); }},
    /* Ji42  */ {2, 3, 1, [](const Ctx& c) { return six(c.HH6d, c.A, c.A, c.AB); }},
    /* Ji43  */ {2, 3, 1, [](const Ctx& c) { return six(c.HH6d, c.A, c.B, c.A2); }},
    /* Ji44  */ {2, 2, 2, [](const Ctx& c) { return six(c.HH6d, c.A, c.B, c.AB); }},
    /* Ji45  */ {2, 2, 2, [](const Ctx& c) { return six(c.HH6d, c.A, c.A, c.B2); }},
    /* Ji46  */ {3, 1, 2, [](const Ctx& c) { return dot(c.cv33, cross(c.As, c.B2s)); }},
    /* Ji47  */ {3, 2, 1, [](const Ctx& c) { return dot(c.cv33, cross(c.As, c.ABss)); }},
    /* Ji48  */ {3, 1, 2, [](const Ctx& c) { return dot(c.cv33, cross(c.Bs, c.ABss)); }},
    /* Ji49  */ {3, 2, 1, [](const Ctx& c) { return dot(c.cv33, cross(c.A2s, c.Bs)); }},
    /* Ji50  */ {3, 1, 2, [](const Ctx& c) { return quad(c.H3s, c.A, c.B2); }},
    /* Ji51  */ {3, 1, 2, [](const Ctx& c) { return quad(c.H3s, c.B, c.AB); }},
    /* Ji52  */ {3, 2, 1, [](const Ctx& c) { return quad(c.H3s, c.B, c.A2); }},
    /* Ji53  */ {3, 2, 1, [](const Ctx& c) { return quad(c.H3s, c.A, c.AB); }},
    /* Ji54  */ {3, 1, 2, [](const Ctx& c) { return ddot2(contr3(c.cv35, c.axb), c.B); }},
    /* Ji55  */ {3, 2, 1, [](const Ctx& c) { return ddot2(contr3(c.cv35, c.axb), c.A); }},
    /* Ji56  */ {3, 1, 2, [](const Ctx& c) { return six(c.H2H6d, c.A, c.B, c.B); }},
    /* Ji57  */ {3, 2, 1, [](const Ctx& c) { return six(c.H2H6d, c.B, c.A, c.A); }},
    /* Ji58  */ {4, 1, 1, [](const Ctx& c) { return ddot(c.d22, c.AB); }},
    /* Ji59  */ {4, 1, 1, [](const Ctx& c) { return ddot(c.c4, c.AB); }},
    /* Ji60  */ {4, 1, 1, [](const Ctx& c) { return dot(c.trHxc3, c.axb); }},
    /* Ji61  */ {4, 1, 1, [](const Ctx& c) { return quad(c.H4s, c.A, c.B); }},
    /* Ji62  */ {2, 1, 4, [](const Ctx& c) { return six(c.HH6d, c.B, c.B, c.AB2); }},
    /* Ji63  */ {2, 1, 4, [](const Ctx& c) { return six(c.HH6d, c.A, c.B2, c.B2); }},
    /* Ji64  */ {2, 1, 4, [](const Ctx& c) { return six(c.HH6d, c.B, c.B2, c.AB); }},
    /* Ji65  */ {2, 2, 3, [](const Ctx& c) { return six(c.HH6d, c.B, c.B, c.A2B); }},
    /* Ji66  */ {2, 2, 3, [](const Ctx& c) { return six(c.HH6d, c.A, c.B2, c.AB); }},
    /* Ji67  */ {2, 3, 2, [](const Ctx& c) { return six(c.HH6d, c.B, c.A2, c.AB); }},
    /* Ji68  */ {2, 3, 2, [](const Ctx& c) { return six(c.HH6d, c.A, c.B, c.A2B); }},
    /* Ji69  */ {2, 3, 2, [](const Ctx& c) { return six(c.HH6d, c.A, c.A2, c.B2); }},
    /* Ji70  */ {2, 4, 1, [](const Ctx& c) { return six(c.HH6d, c.A, c.A2, c.AB); }},
    /* Ji71  */ {2, 4, 1, [](const Ctx& c) { return six(c.HH6d, c.A, c.A, c.A2B); }},
    /* Ji72  */ {2, 4, 1, [](const Ctx& c) { return six(c.HH6d, c.B, c.A2, c.A2); }},
    /* Ji73  */ {2, 3, 2, [](const Ctx& c) { return six(c.HH6d, c.A, c.AB, c.AB); }},
    /* Ji74  */ {2, 2, 3, [](const Ctx& c) { return six(c.HH6d, c.B, c.AB, c.AB); }},
    /* Ji75  */ {2, 2, 3, [](const Ctx& c) { return six(c.HH6d, c.B, c.A2, c.B2); }},
    /* Ji76  */ {3, 1, 3, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.Bs, c.ABss)), c.B); }},
    /* Ji77  */ {3, 2, 2, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.Bs, c.ABss)), c.A); }},
    /* Ji78  */ {3, 2, 2, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.As, c.B2s)), c.A); }},
    /* Ji79  */ {3, 2, 2, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.A2s, c.Bs)), c.B); }},
    /* Ji80  */ {3, 3, 1, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.A2s, c.Bs)), c.A); }},
    /* Ji81  */ {3, 3, 1, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.As, c.ABss)), c.A); }},
    /* Ji82  */ {3, 3, 1, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.A2s, c.As)), c.B); }},
    /* Ji83  */ {3, 1, 3, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.As, c.B2s)), c.B); }},
    /* Ji84  */ {3, 1, 3, [](const Ctx& c) { return ddot2(contr3(c.cv35, cross(c.B2s, c.Bs)), c.A); }},
    /* Ji85  */ {3, 2, 2, [](const Ctx& c) { return quad(c.H3s, c.AB, c.AB); }},
    /* Ji86  */ {3, 1, 3, [](const Ctx& c) { return six(c.H2H6d, c.B, c.B, c.AB); }},
    /* Ji87  */ {3, 1, 3, [](const Ctx& c) { return six(c.H2H6d, c.A, c.B, c.B2); }},
    /* Ji88  */ {3, 2, 2, [](const Ctx& c) { return six(c.H2H6d, c.A, c.A, c.B2); }},
    /* Ji89  */ {3, 2, 2, [](const Ctx& c) { return six(c.H2H6d, c.A, c.B, c.AB); }},
    /* Ji90  */ {3, 2, 2, [](const Ctx& c) { return six(c.H2H6d, c.B, c.B, c.A2); }},
    /* Ji91  */ {3, 3, 1, [](const Ctx& c) { return six(c.H2H6d, c.A, c.B, c.A2); }},
    /* Ji92  */ {3, 3, 1, [](const Ctx& c) { return six(c.H2H6d, c.A, c.A, c.AB); }},
    /* Ji93  */ {3, 1, 3, [](const Ctx& c) { return quad(c.w37, c.B, c.B); }},
    /* Ji94  */ {3, 2, 2, [](const Ctx& c) { return quad(c.w37, c.A, c.B); }},
    /* Ji95  */ {3, 3, 1, [](const Ctx& c) { return quad(c.w37, c.A, c.A); }},
    /* Ji96  */ {4, 1, 2, [](const Ctx& c) { return dot(c.trHxc3, cross(c.As, c.B2s)); }},
    /* Ji97  */ {4, 1, 2, [](const Ctx& c) { return dot(c.trHxc3, cross(c.Bs, c.ABss)); }},
    /* Ji98  */ {4, 2, 1, [](const Ctx& c) { return dot(c.trHxc3, cross(c.As, c.ABss)); }},
    /* Ji99  */ {4, 2, 1, [](const Ctx& c) { return dot(c.trHxc3, cross(c.A2s, c.Bs)); }},
    /* Ji100 */ {4, 1, 2, [](const Ctx& c) { return quad(c.H4s, c.B, c.AB); }},
    /* Ji101 */ {4, 2, 1, [](const Ctx& c) { return quad(c.H4s, c.A, c.AB); }},
    /* Ji102 */ {4, 2, 1, [](const Ctx& c) { return quad(c.H4s, c.B, c.A2); }},
    /* Ji103 */ {4, 1, 2, [](const Ctx& c) { return quad(c.H4s, c.A, c.B2); }},
    /* Ji104 */ {4, 1, 2, [](const Ctx& c) { return ddot2(contr3(c.Hxc3_5, c.axb), c.B); }},
    /* Ji105 */ {4, 2, 1, [](const Ctx& c) { return ddot2(contr3(c.Hxc3_5, c.axb), c.A); }},
    /* Ji106 */ {4, 1, 2, [](const Ctx& c) { return ddot2(contr3(c.cv4b5, c.axb), c.B); }},
    /* Ji107 */ {4, 2, 1, [](const Ctx& c) { return ddot2(contr3(c.cv4b5, c.axb), c.A); }},
    /* Ji108 */ {4, 1, 2, [](const Ctx& c) { return six(c.H2H26d, c.A, c.B, c.B); }},
    /* Ji109 */ {4, 2, 1, [](const Ctx& c) { return six(c.H2H26d, c.A, c.A, c.B); }},
    /* Ji110 */ {5, 1, 1, [](const Ctx& c) { return ddot(c.c5, c.AB); }},
    /* Ji111 */ {5, 1, 1, [](const Ctx& c) { return ddot(symp(c.d2 * c.c3), c.AB); }},
    /* Ji112 */ {5, 1, 1, [](const Ctx& c) { return dot(c.d2xc3, c.axb); }},
    /* Ji113 */ {5, 1, 1, [](const Ctx& c) { return dot(c.trHxd22, c.axb); }},
    /* Ji114 */ {5, 1, 1, [](const Ctx& c) { return quad(c.Hd22, c.A, c.B); }},
    /* Ji115 */ {3, 1, 4, [](const Ctx& c) { return six(c.H2H6d, c.B, c.B2, c.AB); }},
    /* Ji116 */ {3, 2, 3, [](const Ctx& c) { return six(c.H2H6d, c.B, c.AB, c.AB); }},
    /* Ji117 */ {3, 4, 1, [](const Ctx& c) { return six(c.H2H6d, c.B, c.A2, c.A2); }},
    /* Ji118 */ {3, 3, 2, [](const Ctx& c) { return six(c.H2H6d, c.B, c.A2, c.AB); }},
    /* Ji119 */ {3, 1, 4, [](const Ctx& c) { return quad(contr3(c.cv37, cross(c.Bs, c.ABss)), c.B, c.B); }},
    /* Ji120 */ {3, 2, 3, [](const Ctx& c) { return quad(contr3(c.cv37, cross(c.Bs, c.ABss)), c.A, c.B); }},
    /* Ji121 */ {3, 3, 2, [](const Ctx& c) { return quad(contr3(c.cv37, cross(c.As, c.ABss)), c.A, c.B); }},
    /* Ji122 */ {3, 1, 4, [](const Ctx& c) { return six(c.w39d, c.B, c.B, c.B); }},
    /* Ji123 */ {3, 4, 1, [](const Ctx& c) { return six(c.w39d, c.A, c.A, c.A); }},
    /* Ji124 */ {3, 3, 2, [](const Ctx& c) { return six(c.w39d, c.A, c.A, c.B); }},
    /* Ji125 */ {3, 2, 3, [](const Ctx& c) { return six(c.w39d, c.A, c.B, c.B); }},
    /* Ji126 */ {3, 4, 1, [](const Ctx& c) { return quad(contr3(c.cv37, cross(c.As, c.ABss)), c.A, c.A); }},
    /* Ji127 */ {4, 3, 1, [](const Ctx& c) { return ddot2(contr3(c.cv4b5, cross(c.As, c.ABss)), c.A); }},
    /* Ji128 */ {4, 3, 1, [](const Ctx& c) { return ddot2(contr3(c.cv4b5, cross(c.A2s, c.Bs)), c.A); }},
    /* Ji129 */ {4, 2, 2, [](const Ctx& c) { return ddot2(contr3(c.cv4b5, cross(c.A2s, c.Bs)), c.B); }},
    /* Ji130 */ {4, 1, 3, [](const Ctx& c) { return six(c.H2H26d, c.A, c.B, c.B2); }},
    /* Ji131 */ {4, 3, 1, [](const Ctx& c) { return six(c.H2H26d, c.A, c.B, c.A2); }},
    /* Ji132 */ {4, 3, 1, [](const Ctx& c) { return six(c.H2H26d, c.A, c.A, c.AB); }},
    /* Ji133 */ {4, 1, 3, [](const Ctx& c) { return six(c.H2H26d, c.B, c.B, c.AB); }},
    /* Ji134 */ {4, 2, 2, [](const Ctx& c) { return six(c.H2H26d, c.A, c.B, c.AB); }},
    /* Ji135 */ {4, 2, 2, [](const Ctx& c) { return six(c.H2H26d, c.B, c.B, c.A2); }},
    /* Ji136 */ {4, 2, 2, [](const Ctx& c) { return six(c.H2H26d, c.A, c.A, c.B2); }},
    /* Ji137 */ {4, 1, 3, [](const Ctx& c) { return quad(c.w47, c.B, c.B); }},
    /* Ji138 */ {4, 3, 1, [](const Ctx& c) { return quad(c.w47, c.A, c.A); }},
    /* Ji139 */ {4, 2, 2, [](const Ctx& c) { return quad(c.w47, c.B, c.A); }},
    // Ji140 is printed identically to Ji127 in the source table
    /* Ji140 */ {4, 3, 1, [](const Ctx& c) { return ddot2(contr3(c.cv4b5, cross(c.As, c.ABss)), c.A); }},
    /* Ji141 */ {4, 2, 2, [](const Ctx& c) { return ddot2(contr3(c.cv4b5, cross(c.Bs, c.ABss)), c.A); }},
    /* Ji142 */ {4, 1, 3, [](const Ctx& c) { return ddot2(contr3(c.cv4b5, cross(c.As, c.B2s)), c.B); }},
    /* Ji143 */ {5, 2, 1, [](const Ctx& c) { return quad(c.Hd22, c.A, c.AB); }},
    /* Ji144 */ {5, 2, 1, [](const Ctx& c) { return quad(c.Hd22, c.B, c.A2); }},
    /* Ji145 */ {5, 1, 2, [](const Ctx& c) { return quad(c.Hd22, c.B, c.AB); }},
    /* Ji146 */ {5, 1, 2, [](const Ctx& c) { return quad(c.Hd22, c.A, c.B2); }},
    /* Ji147 */ {5, 1, 2, [](const Ctx& c) { return ddot2(contr3(c.Hxd22_5, c.axb), c.B); }},
    /* Ji148 */ {5, 2, 1, [](const Ctx& c) { return ddot2(contr3(c.Hxc4_5, c.axb), c.A); }},
    /* Ji149 */ {5, 1, 2, [](const Ctx& c) { return ddot2(contr3(c.Hxc4_5, c.axb), c.B); }},
    /* Ji150 */ {5, 2, 1, [](const Ctx& c) { return ddot2(contr3(c.H2sxc3_5, c.axb), c.A); }},
    /* Ji151 */ {5, 1, 2, [](const Ctx& c) { return ddot2(contr3(c.H2sxc3_5, c.axb), c.B); }},
    /* Ji152 */ {5, 2, 1, [](const Ctx& c) { return ddot2(contr3(c.Hxd22_5, c.axb), c.A); }},
    /* Ji153 */ {5, 2, 1, [](const Ctx& c) { return dot(c.trHxd22, cross(c.A2s, c.Bs)); }},
    /* Ji154 */ {5, 1, 2, [](const Ctx& c) { return dot(c.trHxd22, cross(c.As, c.B2s)); }},
    /* Ji155 */ {6, 1, 1, [](const Ctx& c) { return ddot(symp(c.d2 * c.c4), c.AB); }},
    /* Ji156 */ {6, 1, 1, [](const Ctx& c) { return ddot(c.c3 * c.c3, c.AB); }},
    /* Ji157 */ {6, 1, 1, [](const Ctx& c) { return dot(c.trHxc5, c.axb); }},
    /* Ji158 */ {6, 1, 1, [](const Ctx& c) { return dot(c.d2xc4, c.axb); }},
    /* Ji159 */ {6, 1, 1, [](const Ctx& c) { return quad(c.H2d22, c.A, c.B); }},
    /* Ji160 */ {6, 2, 1, [](const Ctx& c) {
        V3 w = to_vec(contr3(c.H, c.axb));
        return c.v5.dot(c.A * w);
    }},
    /* Ji161 */ {6, 1, 2, [](const Ctx& c) {
        V3 w = to_vec(contr3(c.H, c.axb));
        return c.v5.dot(c.B * w);
    }},
    /* Ji162 */ {6, 1, 2, [](const Ctx& c) {
        V3 u = vec_c2(c.cv33, c.B);
        return u.dot(c.A * u);
    }},
    /* Ji163 */ {6, 2, 1, [](const Ctx& c) {
        V3 u = vec_c2(c.cv33, c.A);
        return u.dot(c.B * u);
    }},
    /* Ji164 */ {6, 1, 2, [](const Ctx& c) { return ddot2(contr3(c.Hxc5_5, c.axb), c.B); }},
    /* Ji165 */ {6, 2, 1, [](const Ctx& c) { return ddot2(contr3(c.Hxc5_5, c.axb), c.A); }},
    /* Ji166 */ {7, 1, 1, [](const Ctx& c) { return ddot(c.d2, mat_c1(c.axb, c.v5)); }},
    /* Ji167 */ {7, 1, 1, [](const Ctx& c) { return dot(c.c3xc4, c.axb); }},
    /* Ji168 */ {7, 1, 1, [](const Ctx& c) { return ddot(symp(c.c4 * c.c3), c.AB); }},
    /* Ji169 */ {7, 1, 1, [](const Ctx& c) { return ddot(symp(c.d22 * c.c3), c.AB); }},
    /* Ji170 */ {8, 1, 1, [](const Ctx& c) { return c.v8a.dot(eps_contract(c.AB)); }},
    /* Ji171 */ {8, 1, 1, [](const Ctx& c) { return ddot(c.c4 * c.c4, c.AB); }},
    /* Ji172 */ {9, 1, 1, [](const Ctx& c) { return c.v9a.dot(eps_contract(c.AB)); }},
    /* Ji173 */ {9, 1, 1, [](const Ctx& c) { return c.v9b.dot(eps_contract(c.AB)); }},
    /* Ji174 */ {9, 1, 1, [](const Ctx& c) { return ddot(c.d22 * c.c5, c.ABs); }},
};
static_assert(sizeof(kJi) / sizeof(kJi[0]) == 174);

} // namespace

std::vector<InvariantEntry> integrity_basis(const HarmonicDecomposition& dec) {
    Ctx c = make_ctx(dec);
    std::vector<InvariantEntry> out;
    out.reserve(297);

    // 15 simple invariants
    out.push_back({"lambda", 0, 0, 0, c.lambda});
    out.push_back({"mu", 0, 0, 0, c.mu});
    out.push_back({"tr(a^2)", 0, 2, 0, (c.A2).trace()});
    out.push_back({"tr(a^3)", 0, 3, 0, (c.A2 * c.A).trace()});
    out.push_back({"tr(b^2)", 0, 0, 2, (c.B2).trace()});
    out.push_back({"tr(b^3)", 0, 0, 3, (c.B2 * c.B).trace()});
    out.push_back({"I2", 2, 0, 0, c.d2.trace()});
    out.push_back({"I3", 3, 0, 0, c.d3.trace()});
    out.push_back({"I4", 4, 0, 0, c.d22.trace()});
    out.push_back({"I5", 5, 0, 0, (c.d2 * c.d3).trace()});
    out.push_back({"I6", 6, 0, 0, (c.d22 * c.d2).trace()});
    out.push_back({"I7", 7, 0, 0, (c.d22 * c.d3).trace()});
    out.push_back({"I8", 8, 0, 0, (c.d2 * c.d3 * c.d3).trace()});
    out.push_back({"I9", 9, 0, 0, (c.d3 * c.d3 * c.d3).trace()});
    out.push_back({"I10", 10, 0, 0, (c.d22 * c.d3 * c.d3).trace()});

    // 4 joint invariants of (a, b)
    out.push_back({"tr(ab)", 0, 1, 1, c.AB.trace()});
    out.push_back({"tr(a^2 b)", 0, 2, 1, c.A2B.trace()});
    out.push_back({"tr(a b^2)", 0, 1, 2, c.AB2.trace()});
    out.push_back({"tr(a^2 b^2)", 0, 2, 2, c.A2B2.trace()});

    // 52 joint invariants of (H, a) and the same formulas for (H, b)
    Side sa = make_side(c.A), sb = make_side(c.B);
    for (int i = 0; i < 52; ++i)
        out.push_back({"j_a" + std::to_string(i + 1), kJa[i].dh, kJa[i].dx, 0, kJa[i].f(c, sa)});
    for (int i = 0; i < 52; ++i)
        out.push_back({"j_b" + std::to_string(i + 1), kJa[i].dh, 0, kJa[i].dx, kJa[i].f(c, sb)});

    // 174 joint invariants of (H, a, b)
    for (int i = 0; i < 174; ++i)
        out.push_back({"J_i" + std::to_string(i + 1), kJi[i].dh, kJi[i].da, kJi[i].db, kJi[i].f(c)});

    return out;
}

std::vector<InvariantEntry> integrity_basis(const ElasticityTensor& e) {
    return integrity_basis(decompose(e));
}

} // namespace elasym
