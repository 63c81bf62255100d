#include "elasym/tensor.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace elasym {

namespace {

// largest order any covariant construction needs (the order-9 entries of
// the H^4 basis); also bounds the dense 3^n scratch sizes
constexpr int kMaxOrder = 9;

int pow3(int n) {
    int r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

// digit counts (#0s is implied) of a flat base-3 index
inline void digit_counts(int flat, int order, int& beta, int& gamma) {
    beta = 0; gamma = 0;
    for (int k = 0; k < order; ++k) {
        int d = flat % 3;
        flat /= 3;
        beta += (d == 1);
        gamma += (d == 2);
    }
}

inline double eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

int flat_of(std::initializer_list<int> axes) {
    int flat = 0, p = 1;
    for (int ax : axes) {
        if (ax < 0 || ax > 2) throw std::invalid_argument("tensor index out of range");
        flat += ax * p;
        p *= 3;
    }
    return flat;
}

} // namespace

namespace {
int checked_order(int ord, const char* who) {
    if (ord < 0 || ord > kMaxOrder)
        throw std::invalid_argument(std::string(who) + ": order outside the supported range 0..9");
    return ord;
}
} // namespace

DenseTensor::DenseTensor(int ord) : order(ord), a(pow3(checked_order(ord, "DenseTensor")), 0.0) {}

double& DenseTensor::at(std::initializer_list<int> axes) {
    if (static_cast<int>(axes.size()) != order) throw std::invalid_argument("DenseTensor::at: arity mismatch");
    return a[flat_of(axes)];
}

double DenseTensor::at(std::initializer_list<int> axes) const {
    if (static_cast<int>(axes.size()) != order) throw std::invalid_argument("DenseTensor::at: arity mismatch");
    return a[flat_of(axes)];
}

SymTensor::SymTensor(int order)
    : order_(order), c_(mono_count(checked_order(order, "SymTensor")), 0.0) {}

SymTensor SymTensor::metric() {
    SymTensor q(2);
    q.at(2, 0, 0) = 1.0;
    q.at(0, 2, 0) = 1.0;
    q.at(0, 0, 2) = 1.0;
    return q;
}

SymTensor SymTensor::basis_vector(int axis) {
    SymTensor e(1);
    e.at(axis == 0, axis == 1, axis == 2) = 1.0;
    return e;
}

SymTensor SymTensor::scalar(double v) {
    SymTensor s(0);
    s.raw()[0] = v;
    return s;
}

double& SymTensor::at(int alpha, int beta, int gamma) {
    if (alpha < 0 || beta < 0 || gamma < 0 || alpha + beta + gamma != order_)
        throw std::invalid_argument("SymTensor::at: bad multiset");
    return c_[mono_index(order_, beta, gamma)];
}

double SymTensor::at(int alpha, int beta, int gamma) const {
    if (alpha < 0 || beta < 0 || gamma < 0 || alpha + beta + gamma != order_)
        throw std::invalid_argument("SymTensor::at: bad multiset");
    return c_[mono_index(order_, beta, gamma)];
}

double SymTensor::component(std::initializer_list<int> axes) const {
    if (static_cast<int>(axes.size()) != order_) throw std::invalid_argument("SymTensor::component: arity mismatch");
    int b = 0, g = 0;
    for (int ax : axes) { b += (ax == 1); g += (ax == 2); }
    return c_[mono_index(order_, b, g)];
}

void SymTensor::set_component(std::initializer_list<int> axes, double v) {
    if (static_cast<int>(axes.size()) != order_) throw std::invalid_argument("SymTensor::set_component: arity mismatch");
    int b = 0, g = 0;
    for (int ax : axes) { b += (ax == 1); g += (ax == 2); }
    c_[mono_index(order_, b, g)] = v;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
    if (order_ != o.order_) throw std::invalid_argument("SymTensor: order mismatch in +=");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
    if (order_ != o.order_) throw std::invalid_argument("SymTensor: order mismatch in -=");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

SymTensor& SymTensor::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

SymTensor operator+(SymTensor a, const SymTensor& b) { a += b; return a; }
SymTensor operator-(SymTensor a, const SymTensor& b) { a -= b; return a; }
SymTensor operator*(double s, SymTensor a) { a *= s; return a; }

double dot(const SymTensor& a, const SymTensor& b) {
    if (a.order() != b.order()) throw std::invalid_argument("dot: order mismatch");
    int n = a.order();
    double s = 0.0;
    for (int g = 0; g <= n; ++g)
        for (int bb = 0; bb + g <= n; ++bb) {
            int i = mono_index(n, bb, g);
            s += static_cast<double>(multinomial(n, n - bb - g, bb, g)) * a.raw()[i] * b.raw()[i];
        }
    return s;
}

double norm(const SymTensor& a) { return std::sqrt(dot(a, a)); }

double norm(const DenseTensor& t) {
    double s = 0.0;
    for (double v : t.a) s += v * v;
    return std::sqrt(s);
}

DenseTensor expand(const SymTensor& s) {
    DenseTensor t(s.order());
    int n = s.order();
    for (size_t flat = 0; flat < t.a.size(); ++flat) {
        int b, g;
        digit_counts(static_cast<int>(flat), n, b, g);
        t.a[flat] = s.raw()[mono_index(n, b, g)];
    }
    return t;
}

SymTensor symmetrize(const DenseTensor& t) {
    SymTensor s(t.order);
    int n = t.order;
    for (size_t flat = 0; flat < t.a.size(); ++flat) {
        int b, g;
        digit_counts(static_cast<int>(flat), n, b, g);
        s.raw()[mono_index(n, b, g)] += t.a[flat];
    }
    for (int g = 0; g <= n; ++g)
        for (int b = 0; b + g <= n; ++b)
            s.raw()[mono_index(n, b, g)] /= static_cast<double>(multinomial(n, n - b - g, b, g));
    return s;
}

SymTensor compact_symmetric(const DenseTensor& t) {
    SymTensor s(t.order);
    int n = t.order;
    // read one representative per multiset: sorted tuple (0..0 1..1 2..2)
    for (int g = 0; g <= n; ++g)
        for (int b = 0; b + g <= n; ++b) {
            int a = n - b - g;
            int flat = 0, p = 1;
            for (int k = 0; k < a; ++k) p *= 3;
            for (int k = 0; k < b; ++k) { flat += 1 * p; p *= 3; }
            for (int k = 0; k < g; ++k) { flat += 2 * p; p *= 3; }
            s.raw()[mono_index(n, b, g)] = t.a[flat];
        }
    return s;
}

DenseTensor contract(const DenseTensor& t1, const DenseTensor& t2, int r) {
    if (r < 0 || r > t1.order || r > t2.order)
        throw std::invalid_argument("contract: r out of range");
    int p = t1.order, q = t2.order;
    int nfree1 = pow3(p - r), nfree2 = pow3(q - r), nk = pow3(r);
    DenseTensor out(p + q - 2 * r);
    for (int f2 = 0; f2 < nfree2; ++f2) {
        for (int f1 = 0; f1 < nfree1; ++f1) {
            double s = 0.0;
            for (int k = 0; k < nk; ++k)
                s += t1.a[f1 + k * nfree1] * t2.a[k + f2 * nk];
            out.a[f1 + f2 * nfree1] = s;
        }
    }
    return out;
}

SymTensor sym_contract(const SymTensor& s1, const SymTensor& s2, int r) {
    if (r < 0 || r > s1.order() || r > s2.order())
        throw std::invalid_argument("sym_contract: r out of range");
    return symmetrize(contract(expand(s1), expand(s2), r));
}

SymTensor sym_product(const SymTensor& s1, const SymTensor& s2) {
    // tensor product followed by total symmetrization
    DenseTensor d1 = expand(s1), d2 = expand(s2);
    DenseTensor out(s1.order() + s2.order());
    int n1 = static_cast<int>(d1.a.size());
    for (size_t i2 = 0; i2 < d2.a.size(); ++i2) {
        double v2 = d2.a[i2];
        if (v2 == 0.0) continue;
        for (int i1 = 0; i1 < n1; ++i1)
            out.a[i1 + static_cast<int>(i2) * n1] = d1.a[i1] * v2;
    }
    return symmetrize(out);
}

SymTensor cross(const SymTensor& s1, const SymTensor& s2) {
    int p = s1.order(), q = s2.order();
    if (p < 1 || q < 1) throw std::invalid_argument("cross: both orders must be >= 1");
    DenseTensor d1 = expand(s1), d2 = expand(s2);
    int nfree1 = pow3(p - 1), nfree2 = pow3(q - 1);
    DenseTensor out(p + q - 1);
    for (int f2 = 0; f2 < nfree2; ++f2)
        for (int f1 = 0; f1 < nfree1; ++f1)
            for (int i = 0; i < 3; ++i) {
                double s = 0.0;
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k) {
                        double e = eps(i, j, k);
                        if (e != 0.0) s += e * d1.a[j + f1 * 3] * d2.a[k + f2 * 3];
                    }
                out.a[i + f1 * 3 + f2 * 3 * nfree1] = s;
            }
    return symmetrize(out);
}

SymTensor trace(const SymTensor& s) {
    int n = s.order();
    if (n < 2) throw std::invalid_argument("trace: order must be >= 2");
    SymTensor r(n - 2);
    for (int g = 0; g <= n - 2; ++g)
        for (int b = 0; b + g <= n - 2; ++b) {
            int a = n - 2 - b - g;
            r.at(a, b, g) = s.at(a + 2, b, g) + s.at(a, b + 2, g) + s.at(a, b, g + 2);
        }
    return r;
}

SymTensor deviator(const SymTensor& a) {
    if (a.order() != 2) throw std::invalid_argument("deviator: order-2 tensor expected");
    double t = trace(a).raw()[0];
    return a - (t / 3.0) * SymTensor::metric();
}

Poly to_poly(const SymTensor& s) {
    int n = s.order();
    Poly p(n);
    for (int g = 0; g <= n; ++g)
        for (int b = 0; b + g <= n; ++b) {
            int i = mono_index(n, b, g);
            p.c[i] = static_cast<double>(multinomial(n, n - b - g, b, g)) * s.raw()[i];
        }
    return p;
}

SymTensor from_poly(const Poly& p) {
    int n = p.degree;
    if (static_cast<int>(p.c.size()) != mono_count(n))
        throw std::invalid_argument("from_poly: coefficient count does not match degree");
    SymTensor s(n);
    for (int g = 0; g <= n; ++g)
        for (int b = 0; b + g <= n; ++b) {
            int i = mono_index(n, b, g);
            s.raw()[i] = p.c[i] / static_cast<double>(multinomial(n, n - b - g, b, g));
        }
    return s;
}

bool is_harmonic(const SymTensor& s, double tol) {
    if (s.order() < 2) return true;
    double n = norm(s);
    return norm(trace(s)) <= tol * (n > 0 ? n : 1.0);
}

namespace {
// trace of q^{(.)k} (.) H for harmonic H of order m picks up this factor
// (polynomial side: Laplacian of q^k h divided by nu(nu-1), nu = 2k+m).
double trace_factor(int k, int m) {
    double nu = 2.0 * k + m;
    return 2.0 * k * (2.0 * k + 2.0 * m + 1.0) / (nu * (nu - 1.0));
}
} // namespace

std::vector<SymTensor> harmonic_decompose(const SymTensor& s) {
    int n = s.order();
    int r = n / 2;
    std::vector<SymTensor> parts(r + 1, SymTensor(0));
    if (n <= 1) {
        parts[0] = s;
        return parts;
    }
    // iterated traces
    std::vector<SymTensor> tr_pow;
    tr_pow.reserve(r + 1);
    tr_pow.push_back(s);
    for (int j = 1; j <= r; ++j) tr_pow.push_back(trace(tr_pow.back()));
    // powers of q
    std::vector<SymTensor> qpow;
    qpow.push_back(SymTensor::scalar(1.0));
    for (int j = 1; j <= r; ++j) qpow.push_back(sym_product(qpow.back(), SymTensor::metric()));

    // triangular solve, highest q-power first
    for (int j = r; j >= 0; --j) {
        SymTensor rhs = tr_pow[j];
        for (int k = j + 1; k <= r; ++k) {
            int m = n - 2 * k;
            double coef = 1.0;
            for (int t = k; t > k - j; --t) coef *= trace_factor(t, m);
            rhs -= coef * sym_product(qpow[k - j], parts[k]);
        }
        int m = n - 2 * j;
        double coef = 1.0;
        for (int t = j; t >= 1; --t) coef *= trace_factor(t, m);
        parts[j] = (1.0 / coef) * rhs;
    }
    return parts;
}

SymTensor harmonic_reconstruct(const std::vector<SymTensor>& parts) {
    if (parts.empty()) throw std::invalid_argument("harmonic_reconstruct: empty list");
    SymTensor q = SymTensor::metric();
    SymTensor qpow = SymTensor::scalar(1.0);
    SymTensor out = parts[0];
    for (size_t k = 1; k < parts.size(); ++k) {
        qpow = sym_product(qpow, q);
        out += sym_product(qpow, parts[k]);
    }
    return out;
}

SymTensor harmonic_part(const SymTensor& s) { return harmonic_decompose(s)[0]; }

DenseTensor rotate(const Rotation& g, const DenseTensor& t) {
    const Eigen::Matrix3d& m = g.matrix();
    int n = t.order;
    DenseTensor cur = t;
    DenseTensor next(n);
    int total = pow3(n);
    int stride = 1;
    for (int axis = 0; axis < n; ++axis) {
        for (int base = 0; base < total; ++base) {
            int digit = (base / stride) % 3;
            if (digit != 0) continue;
            int i0 = base, i1 = base + stride, i2 = base + 2 * stride;
            double v0 = cur.a[i0], v1 = cur.a[i1], v2 = cur.a[i2];
            next.a[i0] = m(0, 0) * v0 + m(0, 1) * v1 + m(0, 2) * v2;
            next.a[i1] = m(1, 0) * v0 + m(1, 1) * v1 + m(1, 2) * v2;
            next.a[i2] = m(2, 0) * v0 + m(2, 1) * v1 + m(2, 2) * v2;
        }
        std::swap(cur.a, next.a);
        stride *= 3;
    }
    return cur;
}

SymTensor rotate(const Rotation& g, const SymTensor& s) {
    if (s.order() == 0) return s;
    return compact_symmetric(rotate(g, expand(s)));
}

Eigen::Matrix3d to_mat(const SymTensor& a) {
    if (a.order() != 2) throw std::invalid_argument("to_mat: order-2 tensor expected");
    Eigen::Matrix3d m;
    m << a.component({0, 0}), a.component({0, 1}), a.component({0, 2}),
         a.component({0, 1}), a.component({1, 1}), a.component({1, 2}),
         a.component({0, 2}), a.component({1, 2}), a.component({2, 2});
    return m;
}

SymTensor sym2_from_mat(const Eigen::Matrix3d& m) {
    SymTensor a(2);
    a.set_component({0, 0}, m(0, 0));
    a.set_component({1, 1}, m(1, 1));
    a.set_component({2, 2}, m(2, 2));
    a.set_component({0, 1}, 0.5 * (m(0, 1) + m(1, 0)));
    a.set_component({0, 2}, 0.5 * (m(0, 2) + m(2, 0)));
    a.set_component({1, 2}, 0.5 * (m(1, 2) + m(2, 1)));
    return a;
}

Eigen::Vector3d to_vec(const SymTensor& v) {
    if (v.order() != 1) throw std::invalid_argument("to_vec: order-1 tensor expected");
    return Eigen::Vector3d(v.component({0}), v.component({1}), v.component({2}));
}

SymTensor sym1_from_vec(const Eigen::Vector3d& v) {
    SymTensor s(1);
    s.set_component({0}, v.x());
    s.set_component({1}, v.y());
    s.set_component({2}, v.z());
    return s;
}

const DenseTensor& levi_civita() {
    static const DenseTensor e = [] {
        DenseTensor t(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) t.a[i + 3 * j + 9 * k] = eps(i, j, k);
        return t;
    }();
    return e;
}

Eigen::Vector3d eps_contract(const Eigen::Matrix3d& m) {
    return Eigen::Vector3d(m(1, 2) - m(2, 1), m(2, 0) - m(0, 2), m(0, 1) - m(1, 0));
}

HarmTensor::HarmTensor(const SymTensor& s, double tol) : t_(s) {
    if (!is_harmonic(s, tol)) throw std::invalid_argument("HarmTensor: trace residual too large");
}

} // namespace elasym
