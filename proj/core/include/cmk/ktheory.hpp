#pragma once

#include "cmk/abelian_group.hpp"
#include "cmk/arquiver.hpp"
#include "cmk/group_expression.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmk {

// K0'(R) = coker(T : Z^{I_0} -> Z^I).
FGAbelianGroup k0_prime(const ARQuiver &q);

// K0'(Lambda) = Z^I for the Auslander algebra.
FGAbelianGroup k0_lambda(const ARQuiver &q);

struct K0Result {
  FGAbelianGroup group;
  std::vector<std::string> warnings;
};

// K0(MF) = coker(T'). The matrix-factorization description needs R = S/(w);
// without `hypersurface` the group is still computed but carries a warning.
K0Result k0_mf(const ARQuiver &q, bool hypersurface);

struct DeterminantResult {
  Integer det;
  bool positive = false;
};

DeterminantResult det_deleted_matrix(const ARQuiver &q);

// coker(M (x) id_A) for a symbolic coefficient group A, read off the Smith
// normal form of M: A/d_i A for each diagonal d_i > 1, plus A^(rows - rank).
GroupExpression coefficient_cokernel(const IntegerMatrix &m, const Atom &coefficients);

// Exact-sequence constraint attached to the opaque summand G = coker K1(m).
inline constexpr const char *residue_sequence_constraint = "exact: R^x/k^x -> G -> k^+ -> 0";

struct K1Presentation {
  GroupExpression expression;
  // Facts the presentation relies on, one per line.
  std::vector<std::string> certificate;
  CoefficientSpec coefficients;
  // Finite-field mode only.
  std::optional<GroupExpression> instantiated;
  std::optional<FiniteAbelianGroup> group;
  std::vector<std::string> opaque;
  std::vector<std::string> notes;
};

// K1'(R) = coker(T . id_{k^x}) + G, valid once det T' > 0 makes the tail
// map Z^{I_0} -> Z^I injective. Throws Refusal otherwise.
K1Presentation k1_prime_presentation(const ARQuiver &q, const CoefficientSpec &c);

// 0 -> coker(T' . id_{k^x}) -> K1(MF) -> k^+ -> 0, under the same gate.
K1Presentation k1_mf_presentation(const ARQuiver &q, const CoefficientSpec &c);

// K1 of the split-exact MCM category: coker(T . id_{k^x}) + G. Needs endo
// descriptors on every indecomposable.
K1Presentation k1_additive_category(const ARQuiver &q, const CoefficientSpec &c);

inline constexpr const char *formal_instantiation_note =
    "formal instantiation: outside the algebraically closed residue field hypothesis";

} // namespace cmk
