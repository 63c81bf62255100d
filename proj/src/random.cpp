#include "elasym/random.hpp"

namespace elasym {

SymTensor random_sym_tensor(std::mt19937_64& rng, int order, double scale) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    SymTensor s(order);
    for (double& v : s.raw()) v = scale * gauss(rng);
    return s;
}

Eigen::Matrix3d random_sym2(std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix3d m;
    double d0 = gauss(rng), d1 = gauss(rng), d2 = gauss(rng);
    double o01 = gauss(rng), o02 = gauss(rng), o12 = gauss(rng);
    m << d0, o01, o02,
         o01, d1, o12,
         o02, o12, d2;
    return scale * m;
}

Eigen::Matrix3d random_deviator(std::mt19937_64& rng, double scale) {
    Eigen::Matrix3d m = random_sym2(rng, scale);
    return m - (m.trace() / 3.0) * Eigen::Matrix3d::Identity();
}

SymTensor random_harm4(std::mt19937_64& rng, bool unit_norm) {
    SymTensor h = harmonic_part(random_sym_tensor(rng, 4));
    if (unit_norm) {
        double n = norm(h);
        if (n > 0) h *= 1.0 / n;
    }
    return h;
}

} // namespace elasym
