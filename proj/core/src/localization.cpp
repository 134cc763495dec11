#include "cmk/localization.hpp"

#include "cmk/errors.hpp"
#include "cmk/exactness.hpp"

#include <algorithm>
#include <sstream>

namespace cmk {
namespace {

std::string join(const std::vector<std::string> &ids, const char *sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    out += (i ? sep : "") + ids[i];
  return out;
}

std::string free_group(std::size_t rank) {
  if (rank == 0)
    return "0";
  return rank == 1 ? "Z" : "Z^" + std::to_string(rank);
}

struct Split {
  std::vector<std::size_t> inside;
  std::vector<std::size_t> outside;
};

Split split(const ARQuiver &q, const std::set<std::string> &subset) {
  Split s;
  s.inside = full_subcategory_indices(q, subset);
  for (std::size_t i = 0; i < q.indecomposables.size(); ++i)
    if (!std::binary_search(s.inside.begin(), s.inside.end(), i))
      s.outside.push_back(i);
  return s;
}

std::vector<std::string> labels(const ARQuiver &q, const std::vector<std::size_t> &idx) {
  std::vector<std::string> out;
  for (auto i : idx)
    out.push_back(q.indecomposables[i].id);
  return out;
}

} // namespace

bool ExactSequenceReport::exact() const {
  return surjective_end && std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; });
}

ExactSequenceReport k0_localization_sequence(const ARQuiver &q,
                                             const std::set<std::string> &subset) {
  require_valid(q);
  const auto [inside, outside] = split(q, subset);
  const std::size_t n = q.indecomposables.size();

  IntegerMatrix inclusion(n, inside.size());
  for (std::size_t j = 0; j < inside.size(); ++j)
    inclusion(inside[j], j) = 1;
  IntegerMatrix projection(outside.size(), n);
  for (std::size_t i = 0; i < outside.size(); ++i)
    projection(i, outside[i]) = 1;
  const IntegerMatrix to_zero(0, outside.size());

  ExactSequenceReport r;
  r.node_labels = {"K0(B)", "K0(A)", "K0(A/B)", "0"};
  r.node_groups = {FGAbelianGroup::free(inside.size()), FGAbelianGroup::free(n),
                   FGAbelianGroup::free(outside.size()), FGAbelianGroup{}};
  using Pair = std::pair<const IntegerMatrix *, const IntegerMatrix *>;
  for (const auto &[f, g] : {Pair{&inclusion, &projection}, Pair{&projection, &to_zero}}) {
    const auto check = is_exact_at(*f, *g);
    r.exact_at.push_back(check.exact);
    r.diagnostics.push_back(check.diagnostic);
  }
  r.surjective_end = cokernel(projection).is_trivial();
  r.maps = {std::move(inclusion), std::move(projection), to_zero};
  return r;
}

UnitGroup unit_group_of_endo(const EndoDescriptor &d, const CoefficientSpec &c) {
  if (d.radical_dim < 0)
    throw InputError("radical_dim must be nonnegative, got " + std::to_string(d.radical_dim));
  if (d.radical_dim > 1)
    throw Refusal("unit-group formula not specified for radical_dim " +
                  std::to_string(d.radical_dim) + " (only k and k[t]/(t^2) are covered)");
  UnitGroup out;
  out.expression = Atom(UnitsAtom{d.residue});
  if (d.radical_dim == 1)
    out.expression += Atom(AdditiveAtom{d.residue});
  if (c.is_finite())
    out.instantiated = instantiate(out.expression, c.q).group;
  return out;
}

FiltrationReport filtration_report(const ARQuiver &q, std::vector<std::string> ordering,
                                   const CoefficientSpec &c) {
  require_valid(q);
  if (ordering.empty())
    ordering = q.ids();
  {
    auto a = ordering, b = q.ids();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw InputError("filtration ordering must be a permutation of the quiver's ids");
  }
  if (!q.indecomposables[q.index_of(ordering.front())].projective)
    throw InputError("filtration ordering must start with the projective");

  FiltrationReport report;
  report.coefficients = c;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const auto &m = q.indecomposables[q.index_of(ordering[i])];
    FiltrationStep step;
    step.subset_ids.assign(ordering.begin(), ordering.begin() + static_cast<std::ptrdiff_t>(i + 1));
    step.subquotient = m.id;
    step.endo = m.endo;
    if (i == 0) {
      step.k1 = Atom(OpaqueAtom{"F0", {"quotient of K1(R) = R^x"}});
      step.note = "quotient of R^x (not computed)";
    } else {
      if (!m.endo)
        throw InputError("missing endo data for '" + m.id + "'");
      auto units = unit_group_of_endo(*m.endo, c);
      step.k1 = std::move(units.expression);
      step.instantiated = std::move(units.instantiated);
      step.note = "F" + std::to_string(i) + "/F" + std::to_string(i - 1) + " = K1(B" +
                  std::to_string(i) + "/B" + std::to_string(i - 1) + ")";
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

std::string semiperfect_view(const ARQuiver &q, const std::set<std::string> &subset) {
  const auto seq = k0_localization_sequence(q, subset);
  const auto [inside, outside] = split(q, subset);
  const auto in_ids = labels(q, inside);
  const auto out_ids = labels(q, outside);

  std::vector<std::string> idempotents;
  for (const auto &id : in_ids)
    idempotents.push_back("e_" + id);

  std::ostringstream os;
  os << "semiperfect view of " << q.name << "\n";
  os << "  ring      R = End(" << join(q.ids(), " + ") << ")^op\n";
  os << "  idempotent e = " << (in_ids.empty() ? "0" : join(idempotents, " + ")) << "\n";
  if (in_ids.empty())
    os << "  eRe = 0\n";
  else
    os << "  eRe   Morita <-> add(" << join(in_ids) << ")\n";
  if (out_ids.empty())
    os << "  R/ReR = 0\n";
  else
    os << "  R/ReR Morita <-> add(" << join(out_ids) << ")\n";
  os << "  S = {x in R | (1-e)x(1-e) in R^x}, R/ReR = S^-1 R\n";
  os << "  K1(eRe) -> K1(R) -> K1(R/ReR) --0--> K0(eRe) -> K0(R) -> K0(R/ReR) -> 0\n";
  os << "  K1 row    K1(add(" << join(in_ids) << ")) -> K1(add(" << join(q.ids())
     << ")) -> K1(add(" << join(out_ids) << "))   [symbolic]\n";
  os << "  K0 row    " << free_group(in_ids.size()) << " -> " << free_group(q.ids().size())
     << " -> " << free_group(out_ids.size()) << " -> 0   "
     << (seq.exact() ? "exact" : "NOT exact") << "\n";
  return os.str();
}

} // namespace cmk
