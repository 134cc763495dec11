#include "cmk/arquiver.hpp"

#include "cmk/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cmk {

std::size_t ARQuiver::index_of(const std::string &id) const {
  for (std::size_t i = 0; i < indecomposables.size(); ++i)
    if (indecomposables[i].id == id)
      return i;
  throw InputError("unknown indecomposable '" + id + "'");
}

bool ARQuiver::contains(const std::string &id) const {
  return std::any_of(indecomposables.begin(), indecomposables.end(),
                     [&](const Indecomposable &m) { return m.id == id; });
}

std::vector<std::string> ARQuiver::ids() const {
  std::vector<std::string> out;
  for (const auto &m : indecomposables)
    out.push_back(m.id);
  return out;
}

std::vector<std::string> ARQuiver::non_projective_ids() const {
  std::vector<std::string> out;
  for (const auto &m : indecomposables)
    if (!m.projective)
      out.push_back(m.id);
  return out;
}

const ARSequence &ARQuiver::sequence_ending_in(const std::string &target) const {
  for (const auto &s : sequences)
    if (s.target == target)
      return s;
  throw InputError("no AR sequence ends in '" + target + "'");
}

bool ValidationReport::has(const std::string &code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation &v) { return v.code == code; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i)
    os << (i ? "; " : "") << violations[i].code << ": " << violations[i].detail;
  return os.str();
}

ValidationReport validate(const ARQuiver &q) {
  ValidationReport report;
  auto flag = [&](std::string code, std::string detail) {
    report.violations.push_back({std::move(code), std::move(detail)});
  };

  std::vector<std::string> seen;
  std::size_t projectives = 0;
  for (std::size_t i = 0; i < q.indecomposables.size(); ++i) {
    const auto &m = q.indecomposables[i];
    if (m.id.empty())
      flag("empty id", "indecomposable #" + std::to_string(i) + " has no id");
    if (std::find(seen.begin(), seen.end(), m.id) != seen.end())
      flag("duplicate id", m.id);
    seen.push_back(m.id);
    if (m.projective) {
      ++projectives;
      if (i != 0)
        flag("projective not first", m.id + " is at position " + std::to_string(i));
    }
    if (m.endo && m.endo->radical_dim < 0)
      flag("negative radical_dim", m.id);
  }
  if (projectives == 0)
    flag("no projective", "exactly one indecomposable must be projective");
  else if (projectives > 1)
    flag("multiple projectives", std::to_string(projectives) + " indecomposables are projective");

  auto known = [&](const std::string &id) { return q.contains(id); };
  for (const auto &s : q.sequences) {
    const std::string where = "sequence ending in " + s.target;
    if (!known(s.target))
      flag("unknown id", where + ": target '" + s.target + "'");
    else if (q.indecomposables[q.index_of(s.target)].projective)
      flag("sequence ends in projective", s.target);
    if (!known(s.left))
      flag("unknown id", where + ": left term '" + s.left + "'");
    for (const auto &[id, count] : s.middle) {
      if (!known(id))
        flag("unknown id", where + ": middle term '" + id + "'");
      if (count < 0)
        flag("negative multiplicity", where + ": " + id);
    }
  }

  for (const auto &m : q.indecomposables) {
    if (m.projective)
      continue;
    const auto n = std::count_if(q.sequences.begin(), q.sequences.end(),
                                 [&](const ARSequence &s) { return s.target == m.id; });
    if (n == 0)
      flag("non-projective without AR sequence", m.id);
    else if (n > 1)
      flag("multiple AR sequences", m.id + " is the target of " + std::to_string(n));
  }
  return report;
}

void require_valid(const ARQuiver &q) {
  const auto report = validate(q);
  if (!report.ok())
    throw InputError("invalid quiver '" + q.name + "': " + report.summary());
}

long multiplicity(const ARQuiver &q, const std::string &l, const Multiset &summands) {
  (void)q.index_of(l);
  long count = 0;
  for (const auto &[id, n] : summands) {
    (void)q.index_of(id);
    if (id == l)
      count = n;
  }
  return count;
}

std::vector<Integer> relation_vector(const ARQuiver &q, const ARSequence &s) {
  const Multiset target{{s.target, 1}};
  const Multiset left{{s.left, 1}};
  std::vector<Integer> v;
  v.reserve(q.indecomposables.size());
  for (const auto &m : q.indecomposables)
    v.emplace_back(multiplicity(q, m.id, target) - multiplicity(q, m.id, s.middle) +
                   multiplicity(q, m.id, left));
  return v;
}

ARMatrix ar_matrix(const ARQuiver &q) {
  require_valid(q);
  ARMatrix out;
  out.row_labels = q.ids();
  out.col_labels = q.non_projective_ids();
  std::vector<std::vector<Integer>> columns;
  for (const auto &id : out.col_labels)
    columns.push_back(relation_vector(q, q.sequence_ending_in(id)));
  out.matrix = IntegerMatrix::from_columns(out.row_labels.size(), columns);
  return out;
}

ARMatrix deleted_ar_matrix(const ARQuiver &q) {
  ARMatrix t = ar_matrix(q);
  // A valid quiver keeps its projective at row 0.
  t.matrix = t.matrix.without_row(0);
  t.row_labels.erase(t.row_labels.begin());
  return t;
}

std::vector<std::size_t> full_subcategory_indices(const ARQuiver &q,
                                                  const std::set<std::string> &subset) {
  for (const auto &id : subset)
    (void)q.index_of(id);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.indecomposables.size(); ++i)
    if (subset.contains(q.indecomposables[i].id))
      out.push_back(i);
  return out;
}

ARQuiver reorder_non_projectives(const ARQuiver &q,
                                 const std::vector<std::string> &non_projective_order) {
  auto expected = q.non_projective_ids();
  auto given = non_projective_order;
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (expected != given)
    throw InputError("ordering is not a permutation of the non-projective indecomposables");
  ARQuiver out = q;
  out.indecomposables.clear();
  for (const auto &m : q.indecomposables)
    if (m.projective)
      out.indecomposables.push_back(m);
  for (const auto &id : non_projective_order)
    out.indecomposables.push_back(q.indecomposables[q.index_of(id)]);
  return out;
}

} // namespace cmk
