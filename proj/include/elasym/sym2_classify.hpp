#pragma once

#include <Eigen/Dense>
#include <vector>

namespace elasym {

// Joint symmetry classes available to a family of symmetric second-order
// tensors, coarsest first.
enum class FamilyClass {
    isotropic,
    transversely_isotropic,
    orthotropic,
    monoclinic,
    triclinic,
};

const char* to_string(FamilyClass c);

// tr(a x b) = (1/3) eps:(ab); vanishes iff a and b commute.
Eigen::Vector3d commutator_vector(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

// |a x a^2| > tol * |a|^3, i.e. a has three simple eigenvalues.
bool is_orthotropic_single(const Eigen::Matrix3d& a, double tol = 1e-8);

// Exact class of the family, decided by the vanishing cascade
// isotropic -> transversely isotropic -> orthotropic -> monoclinic ->
// triclinic. Members with norm <= tol are treated as zero; the others are
// scaled to unit Frobenius norm before any test.
FamilyClass classify_family(const std::vector<Eigen::Matrix3d>& family, double tol = 1e-8);

// Some linear combination alpha*a + beta*b with three simple eigenvalues.
// Requires the pair (a, b) to be at most orthotropic.
Eigen::Matrix3d orthotropic_combination(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b,
                                        double tol = 1e-8);

// Eigenvalue-multiplicity class of a single tensor ({3} isotropic,
// {2,1} transversely isotropic, {1,1,1} orthotropic). Brute-force reference
// used to cross-check the covariant route.
FamilyClass eigen_class_single(const Eigen::Matrix3d& a, double tol = 1e-8);

} // namespace elasym
