#include "cmk/ktheory.hpp"

#include "cmk/errors.hpp"
#include "cmk/normal_form.hpp"

#include <stdexcept>

namespace cmk {
namespace {

std::string residue_symbol(const ARQuiver &q) {
  for (const auto &m : q.indecomposables)
    if (m.projective && m.endo)
      return m.endo->residue;
  return "k";
}

Atom opaque_g() { return OpaqueAtom{"G", {residue_sequence_constraint}}; }

std::string describe_snf(const std::string &name, const IntegerMatrix &m) {
  const auto diag = smith_normal_form(m).diagonal();
  std::string s = "SNF(" + name + ") diagonal [";
  for (std::size_t i = 0; i < diag.size(); ++i)
    s += (i ? "," : "") + diag[i].get_str();
  return s + "], " + std::to_string(m.rows() - diag.size()) + " free row(s)";
}

DeterminantResult require_positive_det(const ARQuiver &q) {
  auto det = det_deleted_matrix(q);
  if (!det.positive)
    throw Refusal("injectivity hypothesis unverified: det T' = " + det.det.get_str() +
                  " is not positive");
  return det;
}

// Instantiates `p.expression` over F_q and cross-checks coker(M . id_{k^x})
// against the enumeration oracle when it fits the budget.
void finish_finite(K1Presentation &p, const IntegerMatrix &m, const std::string &name) {
  const std::uint64_t q = p.coefficients.q;
  p.instantiated = partially_instantiate(p.expression, q);
  auto inst = instantiate(p.expression, q);
  p.group = std::move(inst.group);
  p.opaque = std::move(inst.refused);
  p.notes.emplace_back(formal_instantiation_note);

  const auto units = FiniteAbelianGroup::cyclic(q - 1);
  const auto via_snf = cokernel_with_coefficients(m, units);
  const auto via_expression = instantiate(coefficient_cokernel(m, UnitsAtom{}), q);
  if (!via_expression.ok() || !(*via_expression.group == via_snf))
    throw std::logic_error("coefficient cokernel disagrees with its symbolic expression");
  const std::string label = "coker(" + name + " . id_{k^x}) = " + via_snf.to_string();
  try {
    const auto enumerated = brute_force_cokernel(m, units);
    if (!(enumerated == via_snf))
      throw std::logic_error("coefficient cokernel disagrees with enumeration: " +
                             enumerated.to_string() + " vs " + via_snf.to_string());
    p.certificate.push_back(label + ", confirmed by enumeration over (" + units.to_string() +
                            ")^" + std::to_string(m.rows()));
  } catch (const BudgetExceeded &e) {
    p.certificate.push_back(label + " (enumeration cross-check skipped: " + e.what() + ")");
  }
}

} // namespace

FGAbelianGroup k0_prime(const ARQuiver &q) { return cokernel(ar_matrix(q).matrix); }

FGAbelianGroup k0_lambda(const ARQuiver &q) {
  return FGAbelianGroup::free(q.indecomposables.size());
}

K0Result k0_mf(const ARQuiver &q, bool hypersurface) {
  K0Result out{cokernel(deleted_ar_matrix(q).matrix), {}};
  if (!hypersurface)
    out.warnings.emplace_back("hypersurface hypothesis R = S/(w) not asserted; coker(T') "
                              "equals K0(MF) only for hypersurfaces");
  return out;
}

DeterminantResult det_deleted_matrix(const ARQuiver &q) {
  Integer det = determinant(deleted_ar_matrix(q).matrix);
  const bool positive = det > 0;
  return {std::move(det), positive};
}

GroupExpression coefficient_cokernel(const IntegerMatrix &m, const Atom &coefficients) {
  const auto diag = smith_normal_form(m).diagonal();
  GroupExpression out;
  for (const auto &d : diag)
    if (d > 1)
      out += Atom(quotient(coefficients, d));
  for (std::size_t i = diag.size(); i < m.rows(); ++i)
    out += coefficients;
  return out;
}

K1Presentation k1_prime_presentation(const ARQuiver &q, const CoefficientSpec &c) {
  const auto t = ar_matrix(q);
  const auto det = require_positive_det(q);
  K1Presentation p;
  p.coefficients = c;
  p.expression = coefficient_cokernel(t.matrix, UnitsAtom{residue_symbol(q)}) + opaque_g();
  p.certificate = {
      "det T' = " + det.det.get_str() + " > 0",
      "T' injective, so the tail map Z^{I_0} --T--> Z^I is injective",
      "K1'(R) = coker[K1(m) o (T . id_{k^x})] = coker(T . id_{k^x}) + G",
      describe_snf("T", t.matrix),
      std::string("G = coker K1(m), ") + residue_sequence_constraint,
  };
  if (c.is_finite())
    finish_finite(p, t.matrix, "T");
  return p;
}

K1Presentation k1_mf_presentation(const ARQuiver &q, const CoefficientSpec &c) {
  const auto tp = deleted_ar_matrix(q);
  const auto det = require_positive_det(q);
  const std::string k = residue_symbol(q);
  K1Presentation p;
  p.coefficients = c;
  p.expression = Atom(extension(coefficient_cokernel(tp.matrix, UnitsAtom{k}), Atom(AdditiveAtom{k})));
  p.certificate = {
      "det T' = " + det.det.get_str() + " > 0",
      "T' injective, so the tail map Z^{I_0} --T'--> Z^{I_0} is injective",
      "K1(MF) = coker[pi1(rho) o K1(m') o (T' . id_{k^x})]",
      "exact: 0 -> coker(T' . id_{k^x}) -> K1(MF) -> k^+ -> 0",
      describe_snf("T'", tp.matrix),
  };
  if (c.is_finite())
    finish_finite(p, tp.matrix, "T'");
  return p;
}

K1Presentation k1_additive_category(const ARQuiver &q, const CoefficientSpec &c) {
  const auto t = ar_matrix(q);
  for (const auto &m : q.indecomposables)
    if (!m.endo)
      throw InputError("missing endo data for '" + m.id + "'");
  K1Presentation p;
  p.coefficients = c;
  p.expression = coefficient_cokernel(t.matrix, UnitsAtom{residue_symbol(q)}) + opaque_g();
  p.certificate = {
      "K1(C+) = coker(T . id_{k^x}) + G",
      describe_snf("T", t.matrix),
      std::string("G = coker K1(m), ") + residue_sequence_constraint,
  };
  if (c.is_finite())
    finish_finite(p, t.matrix, "T");
  return p;
}

} // namespace cmk
