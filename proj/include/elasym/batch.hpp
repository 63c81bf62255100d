#pragma once

#include <cstdint>
#include <vector>

#include "elasym/elasticity.hpp"
#include "elasym/h4.hpp"

namespace elasym::batch {

// Data-parallel kernels over independent tensors. Each OpenMP kernel has a
// serial twin used as the reference in tests and benchmarks; per-item work
// is identical, so outputs match bit for bit.

std::vector<H4Class> classify_many(const std::vector<ElasticityTensor>& es, double tol = 1e-8);
std::vector<H4Class> classify_many_serial(const std::vector<ElasticityTensor>& es, double tol = 1e-8);

std::vector<std::vector<InvariantEntry>> integrity_many(const std::vector<ElasticityTensor>& es);
std::vector<std::vector<InvariantEntry>> integrity_many_serial(const std::vector<ElasticityTensor>& es);

// Worst relative equivariance residual of the 70-entry covariant basis over
// (rotation, unit-norm H) pairs drawn from the seed.
double basis_equivariance_residual(int pairs, std::uint64_t seed);
double basis_equivariance_residual_serial(int pairs, std::uint64_t seed);

} // namespace elasym::batch
