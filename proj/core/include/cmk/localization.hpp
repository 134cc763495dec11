#pragma once

#include "cmk/abelian_group.hpp"
#include "cmk/arquiver.hpp"
#include "cmk/group_expression.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cmk {

// K0(B) -> K0(A) -> K0(A/B) -> 0 for B = add(subset) inside the
// Krull-Schmidt category A with indecomposables I.
struct ExactSequenceReport {
  std::vector<std::string> node_labels;
  std::vector<FGAbelianGroup> node_groups;
  std::vector<IntegerMatrix> maps;
  // One entry per interior node.
  std::vector<bool> exact_at;
  std::vector<std::string> diagnostics;
  bool surjective_end = false;

  bool exact() const;
};

ExactSequenceReport k0_localization_sequence(const ARQuiver &q,
                                             const std::set<std::string> &subset);

struct UnitGroup {
  GroupExpression expression;
  std::optional<FiniteAbelianGroup> instantiated;
};

// Units of the quotient endomorphism ring: k^x for a field, k^x + k^+ for
// k[t]/(t^2). Larger radicals are refused.
UnitGroup unit_group_of_endo(const EndoDescriptor &d, const CoefficientSpec &c);

struct FiltrationStep {
  std::vector<std::string> subset_ids;
  std::string subquotient;
  std::optional<EndoDescriptor> endo;
  GroupExpression k1;
  std::optional<FiniteAbelianGroup> instantiated;
  std::string note;
};

// Filtration of K1 of the split MCM category by B_i = add(M_0, ..., M_i)
// with subquotients K1(B_i / B_{i-1}).
struct FiltrationReport {
  std::vector<FiltrationStep> steps;
  CoefficientSpec coefficients;
};

// `ordering` is a permutation of the quiver's ids with the projective first;
// pass an empty vector for the quiver order.
FiltrationReport filtration_report(const ARQuiver &q, std::vector<std::string> ordering,
                                   const CoefficientSpec &c);

// The localization sequence restated for the semiperfect ring
// End(+M)^op with the idempotent e summing the subset's projections.
std::string semiperfect_view(const ARQuiver &q, const std::set<std::string> &subset);

} // namespace cmk
