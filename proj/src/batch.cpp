#include "elasym/batch.hpp"

#include <algorithm>

#include "elasym/random.hpp"

namespace elasym::batch {

namespace {

double pair_residual(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Rotation g = random_rotation(rng);
    HarmTensor H(random_harm4(rng));
    auto rotated = eval_basis(HarmTensor{rotate(g, H.tensor())});
    auto base = eval_basis(H);
    double worst = 0.0;
    for (size_t i = 0; i < base.size(); ++i) {
        SymTensor want = rotate(g, base[i].value);
        double scale = std::max(norm(want), 1e-300);
        worst = std::max(worst, norm(rotated[i].value - want) / scale);
    }
    return worst;
}

} // namespace

std::vector<H4Class> classify_many(const std::vector<ElasticityTensor>& es, double tol) {
    std::vector<H4Class> out(es.size(), H4Class::triclinic);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(es.size()); ++i)
        out[i] = classify_elasticity(es[i], tol);
    return out;
}

std::vector<H4Class> classify_many_serial(const std::vector<ElasticityTensor>& es, double tol) {
    std::vector<H4Class> out(es.size(), H4Class::triclinic);
    for (std::size_t i = 0; i < es.size(); ++i) out[i] = classify_elasticity(es[i], tol);
    return out;
}

std::vector<std::vector<InvariantEntry>> integrity_many(const std::vector<ElasticityTensor>& es) {
    std::vector<std::vector<InvariantEntry>> out(es.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(es.size()); ++i)
        out[i] = integrity_basis(es[i]);
    return out;
}

std::vector<std::vector<InvariantEntry>> integrity_many_serial(const std::vector<ElasticityTensor>& es) {
    std::vector<std::vector<InvariantEntry>> out(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) out[i] = integrity_basis(es[i]);
    return out;
}

double basis_equivariance_residual(int pairs, std::uint64_t seed) {
    double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
    for (int i = 0; i < pairs; ++i)
        worst = std::max(worst, pair_residual(seed + static_cast<std::uint64_t>(i)));
    return worst;
}

double basis_equivariance_residual_serial(int pairs, std::uint64_t seed) {
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i)
        worst = std::max(worst, pair_residual(seed + static_cast<std::uint64_t>(i)));
    return worst;
}

} // namespace elasym::batch
