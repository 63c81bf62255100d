#pragma once

#include <cstdint>
#include <random>

#include "elasym/tensor.hpp"

namespace elasym {

// Seeded draws used by fixture generators and property tests.

SymTensor random_sym_tensor(std::mt19937_64& rng, int order, double scale = 1.0);
Eigen::Matrix3d random_sym2(std::mt19937_64& rng, double scale = 1.0);
Eigen::Matrix3d random_deviator(std::mt19937_64& rng, double scale = 1.0);
// Random order-4 harmonic tensor (harmonic projection of a random draw),
// optionally normalized to unit Frobenius norm.
SymTensor random_harm4(std::mt19937_64& rng, bool unit_norm = true);

} // namespace elasym
