#pragma once

#include "cmk/integer_matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cmk {

// Endomorphism data of an indecomposable: the residue division ring and the
// k-dimension of the radical of its endomorphism ring in the quotient
// category that isolates it (0 means that ring is the residue field itself).
struct EndoDescriptor {
  std::string residue = "k";
  int radical_dim = 0;

  friend bool operator==(const EndoDescriptor &, const EndoDescriptor &) = default;
};

struct Indecomposable {
  std::string id;
  bool projective = false;
  std::optional<EndoDescriptor> endo;

  friend bool operator==(const Indecomposable &, const Indecomposable &) = default;
};

// Summand multiplicities keyed by indecomposable id.
using Multiset = std::map<std::string, long>;

// 0 -> left -> middle -> target -> 0
struct ARSequence {
  std::string target;
  Multiset middle;
  std::string left;

  friend bool operator==(const ARSequence &, const ARSequence &) = default;
};

struct ARQuiver {
  std::string name;
  std::vector<Indecomposable> indecomposables;
  std::vector<ARSequence> sequences;

  // Position of `id` in the indecomposable order; throws InputError if absent.
  std::size_t index_of(const std::string &id) const;
  bool contains(const std::string &id) const;
  std::vector<std::string> ids() const;
  // Ids of the non-projective indecomposables, in quiver order.
  std::vector<std::string> non_projective_ids() const;
  // The sequence ending in `target`; throws InputError if there is none.
  const ARSequence &sequence_ending_in(const std::string &target) const;

  friend bool operator==(const ARQuiver &, const ARQuiver &) = default;
};

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(const std::string &code) const;
  std::string summary() const;
};

ValidationReport validate(const ARQuiver &q);

// Throws InputError carrying the validation summary when `q` is invalid.
void require_valid(const ARQuiver &q);

// Number of `l`-summands in `summands`.
long multiplicity(const ARQuiver &q, const std::string &l, const Multiset &summands);

// Entry l is #(l, target) - #(l, middle) + #(l, left), over all of I.
std::vector<Integer> relation_vector(const ARQuiver &q, const ARSequence &s);

struct ARMatrix {
  IntegerMatrix matrix;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  friend bool operator==(const ARMatrix &, const ARMatrix &) = default;
};

// |I| x |I_0|; column j is the relation vector of the AR sequence ending in
// the j-th non-projective.
ARMatrix ar_matrix(const ARQuiver &q);

// ar_matrix with the projective's row removed; square |I_0| x |I_0|.
ARMatrix deleted_ar_matrix(const ARQuiver &q);

// Quiver positions of `subset`, in quiver order.
std::vector<std::size_t> full_subcategory_indices(const ARQuiver &q,
                                                  const std::set<std::string> &subset);

// Same quiver with non-projectives reordered as `non_projective_order`
// (a permutation of non_projective_ids()); the projective stays first.
ARQuiver reorder_non_projectives(const ARQuiver &q,
                                 const std::vector<std::string> &non_projective_order);

} // namespace cmk
