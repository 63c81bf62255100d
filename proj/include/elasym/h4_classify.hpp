#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>

#include "elasym/h4.hpp"
#include "elasym/sym2_classify.hpp"
#include "elasym/tensor.hpp"

namespace elasym {

// The eight symmetry classes of a fourth-order harmonic tensor (and of an
// elasticity tensor).
enum class H4Class {
    isotropic,
    cubic,
    transversely_isotropic,
    trigonal,
    tetragonal,
    orthotropic,
    monoclinic,
    triclinic,
};

const char* to_string(H4Class c);
std::optional<H4Class> parse_h4_class(const std::string& name);

// Partial order on classes: poset_leq(a, b) holds when a tensor of class a
// is at most as symmetric as one of class b (the stabilizer of a embeds in
// a conjugate of the stabilizer of b).
bool poset_leq(H4Class a, H4Class b);

// Symmetry class of H, decided through its second-order covariants.
// Throws on non-harmonic input (trace residual above tol * |H|).
H4Class classify_h4(const SymTensor& H, double tol = 1e-8);

// Joint class of (H, t) for a transversely isotropic second-order t.
H4Class classify_pair_Ht(const SymTensor& H, const Eigen::Matrix3d& t, double tol = 1e-8);

// Normal-form shape of each class driven by the Kelvin parameters; entries
// not used by the class's shape are ignored.
SymTensor normal_form_from_params(H4Class cls, const Harm4Params& p);

// Random harmonic tensor of the exact class, axes aligned to the frame.
// Rejection-sampled; validated by generator invariance and classify_h4.
SymTensor generate_normal_form(H4Class cls, std::uint64_t seed);

} // namespace elasym
