#include "elasym/elasticity.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "elasym/random.hpp"

namespace elasym {

namespace {

const double kSqrt2 = std::sqrt(2.0);

inline int voigt_index(int i, int j) { return (i == j) ? i : 6 - i - j; }

const int kVoigtPairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};

Matrix6d kelvin_scaler() {
    Matrix6d p = Matrix6d::Identity();
    for (int i = 3; i < 6; ++i) p(i, i) = kSqrt2;
    return p;
}

} // namespace

ElasticityTensor ElasticityTensor::from_voigt(const Matrix6d& m) {
    double scale = std::max(m.cwiseAbs().maxCoeff(), 1.0);
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("ElasticityTensor: Voigt matrix is not symmetric");
    ElasticityTensor e;
    e.v_ = 0.5 * (m + m.transpose());
    return e;
}

ElasticityTensor ElasticityTensor::from_kelvin(const Matrix6d& m) {
    Matrix6d p = kelvin_scaler().inverse();
    return from_voigt(p * m * p);
}

ElasticityTensor ElasticityTensor::from_components21(const std::array<double, 21>& c) {
    Matrix6d m;
    int idx = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            m(i, j) = c[idx];
            m(j, i) = c[idx];
            ++idx;
        }
    return from_voigt(m);
}

Matrix6d ElasticityTensor::kelvin() const {
    Matrix6d p = kelvin_scaler();
    return p * v_ * p;
}

std::array<double, 21> ElasticityTensor::components21() const {
    std::array<double, 21> c{};
    int idx = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) c[idx++] = v_(i, j);
    return c;
}

double ElasticityTensor::operator()(int i, int j, int k, int l) const {
    return v_(voigt_index(i, j), voigt_index(k, l));
}

double& ElasticityTensor::voigt_entry(int I, int J) { return v_(I, J); }

double ElasticityTensor::norm() const { return kelvin().norm(); }

ElasticityTensor& ElasticityTensor::operator+=(const ElasticityTensor& o) { v_ += o.v_; return *this; }
ElasticityTensor& ElasticityTensor::operator-=(const ElasticityTensor& o) { v_ -= o.v_; return *this; }
ElasticityTensor& ElasticityTensor::operator*=(double s) { v_ *= s; return *this; }

ElasticityTensor operator+(ElasticityTensor a, const ElasticityTensor& b) { a += b; return a; }
ElasticityTensor operator-(ElasticityTensor a, const ElasticityTensor& b) { a -= b; return a; }
ElasticityTensor operator*(double s, ElasticityTensor a) { a *= s; return a; }

ElasticityTensor rotate(const Rotation& g, const ElasticityTensor& e) {
    const Eigen::Matrix3d& m = g.matrix();
    ElasticityTensor out;
    for (int I = 0; I < 6; ++I)
        for (int J = I; J < 6; ++J) {
            int i = kVoigtPairs[I][0], j = kVoigtPairs[I][1];
            int k = kVoigtPairs[J][0], l = kVoigtPairs[J][1];
            double s = 0.0;
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    for (int r = 0; r < 3; ++r)
                        for (int t = 0; t < 3; ++t)
                            s += m(i, p) * m(j, q) * m(k, r) * m(l, t) * e(p, q, r, t);
            out.voigt_entry(I, J) = s;
            out.voigt_entry(J, I) = s;
        }
    return out;
}

Eigen::Matrix3d dilatation(const ElasticityTensor& e) {
    Eigen::Matrix3d d;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            d(k, l) = e(0, 0, k, l) + e(1, 1, k, l) + e(2, 2, k, l);
    return d;
}

Eigen::Matrix3d voigt_tensor(const ElasticityTensor& e) {
    Eigen::Matrix3d v;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
            v(j, l) = e(0, j, 0, l) + e(1, j, 1, l) + e(2, j, 2, l);
    return v;
}

HarmonicDecomposition decompose(const ElasticityTensor& e) {
    HarmonicDecomposition dec;
    Eigen::Matrix3d d = dilatation(e);
    Eigen::Matrix3d v = voigt_tensor(e);
    double trd = d.trace(), trv = v.trace();
    dec.lambda = (2.0 * trd - trv) / 15.0;
    dec.mu = (-trd + 3.0 * trv) / 30.0;
    Eigen::Matrix3d dp = d - (trd / 3.0) * Eigen::Matrix3d::Identity();
    Eigen::Matrix3d vp = v - (trv / 3.0) * Eigen::Matrix3d::Identity();
    dec.a = (5.0 * dp - 4.0 * vp) / 7.0;
    dec.b = (-2.0 * dp + 3.0 * vp) / 7.0;

    // H = (E)^s - (2/7) q (.) (d' + 2v') - (1/15)(tr d + 2 tr v) q (.) q
    DenseTensor full(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    full.a[i + 3 * j + 9 * k + 27 * l] = e(i, j, k, l);
    SymTensor S = symmetrize(full);
    SymTensor q = SymTensor::metric();
    dec.H = S - (2.0 / 7.0) * sym_product(q, sym2_from_mat(dp + 2.0 * vp))
              - ((trd + 2.0 * trv) / 15.0) * sym_product(q, q);
    return dec;
}

ElasticityTensor reconstruct(double lambda, double mu, const Eigen::Matrix3d& a,
                             const Eigen::Matrix3d& b, const SymTensor& H) {
    if (H.order() != 4) throw std::invalid_argument("reconstruct: H must have order 4");
    // residuals are judged against the magnitude of the whole decomposition,
    // so a roundoff-size part next to O(1) ones does not trip the gate
    double scale = std::max({std::abs(lambda), std::abs(mu), a.norm(), b.norm(), norm(H), 1e-300});
    if (std::abs(a.trace()) > 1e-10 * scale || std::abs(b.trace()) > 1e-10 * scale)
        throw std::invalid_argument("reconstruct: a and b must be traceless");
    if (norm(trace(H)) > 1e-10 * scale)
        throw std::invalid_argument("reconstruct: H must be harmonic");

    auto delta = [](int i, int j) { return (i == j) ? 1.0 : 0.0; };
    ElasticityTensor out;
    for (int I = 0; I < 6; ++I)
        for (int J = I; J < 6; ++J) {
            int i = kVoigtPairs[I][0], j = kVoigtPairs[I][1];
            int k = kVoigtPairs[J][0], l = kVoigtPairs[J][1];
            double s = lambda * delta(i, j) * delta(k, l)
                     + mu * (delta(i, k) * delta(j, l) + delta(i, l) * delta(j, k))
                     + delta(i, j) * a(k, l) + delta(k, l) * a(i, j)
                     + delta(i, k) * b(j, l) + delta(j, l) * b(i, k)
                     + delta(i, l) * b(j, k) + delta(j, k) * b(i, l)
                     + H.component({i, j, k, l});
            out.voigt_entry(I, J) = s;
            out.voigt_entry(J, I) = s;
        }
    return out;
}

ElasticityTensor reconstruct(const HarmonicDecomposition& dec) {
    return reconstruct(dec.lambda, dec.mu, dec.a, dec.b, dec.H);
}

namespace {

void push_row(ClassificationLedger* led, const char* cond, double res, double thr) {
    if (led) led->rows.push_back({cond, res, thr, res <= thr});
}

void push_family(ClassificationLedger* led, const char* name, FamilyClass c) {
    if (led) led->families.emplace_back(name, to_string(c));
}

} // namespace

H4Class classify_elasticity(const ElasticityTensor& e, double tol, ClassificationLedger* ledger) {
    if (tol <= 0) throw std::invalid_argument("classify_elasticity: tol must be positive");
    double n = e.norm();
    if (n <= 0) return H4Class::isotropic;
    ElasticityTensor en = (1.0 / n) * e;

    HarmonicDecomposition dec = decompose(en);
    const Eigen::Matrix3d &a = dec.a, &b = dec.b;
    // below tol the harmonic part is indistinguishable from roundoff and its
    // own norm is no longer a usable reference for the harmonicity gate
    if (norm(dec.H) <= tol) dec.H = SymTensor(4);
    HarmTensor H(dec.H, 1e-6);
    Eigen::Matrix3d D2 = d2(H);

    double na = a.norm(), nb = b.norm(), nd2 = D2.norm();
    push_row(ledger, "|a|", na, tol);
    push_row(ledger, "|b|", nb, tol);
    push_row(ledger, "|d2|", nd2, tol);
    if (na <= tol && nb <= tol && nd2 <= tol) return H4Class::isotropic;

    Eigen::Matrix3d d2dev = D2 - (D2.trace() / 3.0) * Eigen::Matrix3d::Identity();
    push_row(ledger, "|d2'|", d2dev.norm(), tol);
    if (na <= tol && nb <= tol && d2dev.norm() <= tol) return H4Class::cubic;

    SymTensor as = sym2_from_mat(a), bs = sym2_from_mat(b), d2s = sym2_from_mat(D2);
    FamilyClass fam = classify_family({D2, a, b}, tol);
    push_family(ledger, "(d2, a, b)", fam);

    Eigen::Matrix3d c3 = contract22(dec.H, D2);
    if (fam == FamilyClass::transversely_isotropic) {
        SymTensor cxd2 = cross(dec.H, d2s), cxa = cross(dec.H, as), cxb = cross(dec.H, bs);
        double r3 = std::max({norm(cxd2), norm(cxa), norm(cxb)});
        push_row(ledger, "max(|H x d2|, |H x a|, |H x b|)", r3, tol);
        if (r3 <= tol) return H4Class::transversely_isotropic;

        double r4 = std::max({norm(trace(cxd2)), norm(trace(cxa)), norm(trace(cxb))});
        push_row(ledger, "max(|tr(H x d2)|, |tr(H x a)|, |tr(H x b)|)", r4, tol);
        if (r4 <= tol) return H4Class::tetragonal;

        double r5 = std::max({norm(cross(d2s, sym2_from_mat(c3))),
                              norm(cross(as, sym2_from_mat(contract22(dec.H, a)))),
                              norm(cross(bs, sym2_from_mat(contract22(dec.H, b))))});
        push_row(ledger, "max(|d2 x (H:d2)|, |a x (H:a)|, |b x (H:b)|)", r5, tol);
        if (r5 <= tol) return H4Class::trigonal;
    }

    Eigen::Matrix3d c4 = contract22(dec.H, c3);
    std::vector<Eigen::Matrix3d> fo = {
        D2, a, b, c3, c4,
        contract22(dec.H, a), contract22(dec.H, b),
        contract22(dec.H, a * a), contract22(dec.H, b * b),
    };
    FamilyClass foc = classify_family(fo, tol);
    push_family(ledger, "F_o", foc);
    if (foc == FamilyClass::orthotropic) return H4Class::orthotropic;

    std::vector<Eigen::Matrix3d> fm = fo;
    fm.push_back(contract22(dec.H, 0.5 * (a * b + b * a)));
    fm.push_back(contract22(dec.H, 0.5 * (a * D2 + D2 * a)));
    fm.push_back(contract22(dec.H, 0.5 * (b * D2 + D2 * b)));
    FamilyClass fmc = classify_family(fm, tol);
    push_family(ledger, "F_m", fmc);
    if (fmc == FamilyClass::monoclinic) return H4Class::monoclinic;

    return H4Class::triclinic;
}

ElasticityTensor generate_elasticity(H4Class cls, std::uint64_t seed, bool rotated) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::uniform_real_distribution<double> sign01(0.0, 1.0);
    auto draw = [&] { return (sign01(rng) < 0.5 ? -1.0 : 1.0) * mag(rng); };
    auto tau = [] { return Eigen::Vector3d(1, 1, -2).asDiagonal().toDenseMatrix(); };

    for (int attempt = 0; attempt < 64; ++attempt) {
        double lambda = mag(rng) + 1.0, mu = mag(rng) + 1.0;
        Eigen::Matrix3d a = Eigen::Matrix3d::Zero(), b = Eigen::Matrix3d::Zero();
        SymTensor h = generate_normal_form(cls, rng());

        switch (cls) {
            case H4Class::isotropic:
            case H4Class::cubic:
                break;
            case H4Class::transversely_isotropic:
            case H4Class::tetragonal:
            case H4Class::trigonal:
                a = draw() * tau();
                b = draw() * tau();
                break;
            case H4Class::orthotropic: {
                Eigen::Vector3d da(draw(), draw(), 0), db2(draw(), draw(), 0);
                da(2) = -da(0) - da(1);
                db2(2) = -db2(0) - db2(1);
                a = da.asDiagonal();
                b = db2.asDiagonal();
                break;
            }
            case H4Class::monoclinic: {
                // symmetric with e3 as eigenvector
                double a11 = draw(), a22 = draw(), a12 = draw();
                double b11 = draw(), b22 = draw(), b12 = draw();
                a << a11, a12, 0, a12, a22, 0, 0, 0, -a11 - a22;
                b << b11, b12, 0, b12, b22, 0, 0, 0, -b11 - b22;
                break;
            }
            case H4Class::triclinic:
                a = random_deviator(rng);
                b = random_deviator(rng);
                break;
        }

        ElasticityTensor e = reconstruct(lambda, mu, a, b, h);
        if (rotated) {
            Rotation g = random_rotation(rng);
            e = rotate(g, e);
        }
        if (classify_elasticity(e, 1e-8) == cls) return e;
    }
    throw std::runtime_error("generate_elasticity: exhausted retries");
}

} // namespace elasym
