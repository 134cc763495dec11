#include "cmk/report.hpp"

namespace cmk {

Json to_json(const Integer &n) {
  if (n.fits_slong_p())
    return n.get_si();
  return n.get_str();
}

Json to_json(const IntegerMatrix &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const FGAbelianGroup &g) {
  Json factors = Json::array();
  for (const auto &d : g.invariant_factors())
    factors.push_back(to_json(d));
  return {{"free_rank", g.free_rank()}, {"invariant_factors", std::move(factors)}};
}

Json to_json(const FiniteAbelianGroup &g) {
  return {{"order", g.order()}, {"invariant_factors", g.invariant_factors()}};
}

Json to_json(const Atom &a) {
  Json j;
  j["kind"] = a.kind();
  if (a.is<FreeAtom>())
    j["rank"] = a.as<FreeAtom>().rank;
  else if (a.is<CyclicAtom>())
    j["order"] = to_json(a.as<CyclicAtom>().order);
  else if (a.is<UnitsAtom>())
    j["field"] = a.as<UnitsAtom>().field;
  else if (a.is<AdditiveAtom>())
    j["field"] = a.as<AdditiveAtom>().field;
  else if (a.is<QuotientAtom>()) {
    j["base"] = to_json(*a.as<QuotientAtom>().base);
    j["divisor"] = to_json(a.as<QuotientAtom>().divisor);
  } else if (a.is<OpaqueAtom>()) {
    j["name"] = a.as<OpaqueAtom>().name;
    j["constraints"] = a.as<OpaqueAtom>().constraints;
  } else if (a.is<ExtensionAtom>()) {
    j["kernel"] = to_json(*a.as<ExtensionAtom>().kernel);
    j["quotient"] = to_json(*a.as<ExtensionAtom>().quotient);
  }
  j["text"] = a.to_string();
  return j;
}

Json to_json(const GroupExpression &e) {
  Json atoms = Json::array();
  for (const auto &a : e.summands())
    atoms.push_back(to_json(a));
  return {{"atoms", std::move(atoms)}, {"text", e.to_string()}};
}

Json to_json(const ARMatrix &m) {
  return {{"rows", m.row_labels}, {"cols", m.col_labels}, {"matrix", to_json(m.matrix)}};
}

Json to_json(const ValidationReport &r) {
  Json violations = Json::array();
  for (const auto &v : r.violations)
    violations.push_back({{"code", v.code}, {"detail", v.detail}});
  return {{"valid", r.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const DeterminantResult &d) {
  return {{"det", to_json(d.det)}, {"positive", d.positive}};
}

Json to_json(const K1Presentation &p) {
  Json j;
  j["coefficients"] = p.coefficients.to_string();
  j["expression"] = to_json(p.expression);
  j["certificate"] = p.certificate;
  if (p.coefficients.is_finite()) {
    j["instantiated"] = p.instantiated ? to_json(*p.instantiated) : Json();
    j["group"] = p.group ? to_json(*p.group) : Json();
    j["opaque"] = p.opaque;
  }
  j["notes"] = p.notes;
  return j;
}

Json to_json(const ExactSequenceReport &r) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < r.node_groups.size(); ++i)
    nodes.push_back({{"label", r.node_labels[i]}, {"group", to_json(r.node_groups[i])}});
  Json maps = Json::array();
  for (const auto &m : r.maps)
    maps.push_back({{"shape", {m.rows(), m.cols()}}, {"matrix", to_json(m)}});
  return {{"nodes", std::move(nodes)},   {"maps", std::move(maps)},
          {"exact_at", r.exact_at},      {"diagnostics", r.diagnostics},
          {"surjective_end", r.surjective_end}, {"exact", r.exact()}};
}

Json to_json(const FiltrationReport &r) {
  Json steps = Json::array();
  for (const auto &s : r.steps) {
    Json j;
    j["subset"] = s.subset_ids;
    j["subquotient"] = s.subquotient;
    j["endo"] = s.endo ? Json{{"residue", s.endo->residue}, {"radical_dim", s.endo->radical_dim}}
                       : Json();
    j["k1"] = to_json(s.k1);
    if (r.coefficients.is_finite())
      j["instantiated"] = s.instantiated ? to_json(*s.instantiated) : Json();
    j["note"] = s.note;
    steps.push_back(std::move(j));
  }
  Json out{{"coefficients", r.coefficients.to_string()}, {"steps", std::move(steps)}};
  if (r.coefficients.is_finite())
    out["notes"] = Json::array({formal_instantiation_note});
  return out;
}

} // namespace cmk
