#include "cmk/catalogue.hpp"

#include "cmk/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cmk {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string id_of(int i) { return "M" + std::to_string(i); }

void require_keys(const json &obj, const std::string &where,
                  std::initializer_list<const char *> allowed,
                  std::initializer_list<const char *> required) {
  if (!obj.is_object())
    throw ParseError(where, "expected an object");
  for (const auto &item : obj.items()) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                [&](const char *k) { return item.key() == k; });
    if (!ok)
      throw ParseError(where + "/" + item.key(), "unknown key '" + item.key() + "'");
  }
  for (const char *k : required)
    if (!obj.contains(k))
      throw ParseError(where + "/" + k, "missing required key");
}

const std::string &string_at(const json &obj, const char *key, const std::string &where) {
  const auto &v = obj.at(key);
  if (!v.is_string())
    throw ParseError(where + "/" + key, "expected a string");
  return v.get_ref<const std::string &>();
}

long integer_at(const json &v, const std::string &where) {
  if (!v.is_number_integer())
    throw ParseError(where, "expected an integer");
  return v.get<long>();
}

Indecomposable parse_indecomposable(const json &obj, const std::string &where) {
  require_keys(obj, where, {"id", "projective", "endo"}, {"id", "projective"});
  Indecomposable m;
  m.id = string_at(obj, "id", where);
  if (!obj.at("projective").is_boolean())
    throw ParseError(where + "/projective", "expected a boolean");
  m.projective = obj.at("projective").get<bool>();
  if (obj.contains("endo")) {
    const std::string at = where + "/endo";
    const auto &e = obj.at("endo");
    require_keys(e, at, {"residue", "radical_dim"}, {"radical_dim"});
    EndoDescriptor d;
    if (e.contains("residue"))
      d.residue = string_at(e, "residue", at);
    d.radical_dim = static_cast<int>(integer_at(e.at("radical_dim"), at + "/radical_dim"));
    m.endo = d;
  }
  return m;
}

ARSequence parse_sequence(const json &obj, const std::string &where) {
  require_keys(obj, where, {"target", "middle", "left"}, {"target", "middle", "left"});
  ARSequence s;
  s.target = string_at(obj, "target", where);
  s.left = string_at(obj, "left", where);
  const auto &middle = obj.at("middle");
  if (!middle.is_object())
    throw ParseError(where + "/middle", "expected an object of multiplicities");
  for (const auto &item : middle.items())
    s.middle[item.key()] = integer_at(item.value(), where + "/middle/" + item.key());
  return s;
}

ARQuiver from_json(const json &doc) {
  require_keys(doc, "", {"name", "indecomposables", "ar_sequences"},
               {"name", "indecomposables", "ar_sequences"});
  ARQuiver q;
  q.name = string_at(doc, "name", "");
  const auto &inds = doc.at("indecomposables");
  if (!inds.is_array())
    throw ParseError("/indecomposables", "expected an array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < inds.size(); ++i) {
    const std::string where = "/indecomposables/" + std::to_string(i);
    auto m = parse_indecomposable(inds[i], where);
    if (!ids.insert(m.id).second)
      throw ParseError(where + "/id", "duplicate id '" + m.id + "'");
    q.indecomposables.push_back(std::move(m));
  }
  const auto &seqs = doc.at("ar_sequences");
  if (!seqs.is_array())
    throw ParseError("/ar_sequences", "expected an array");
  for (std::size_t i = 0; i < seqs.size(); ++i)
    q.sequences.push_back(parse_sequence(seqs[i], "/ar_sequences/" + std::to_string(i)));
  return q;
}

} // namespace

ARQuiver a2n_quiver(int n) {
  if (n < 1)
    throw InputError("A_2n family needs n >= 1, got " + std::to_string(n));
  ARQuiver q;
  q.name = "A" + std::to_string(2 * n);
  for (int i = 0; i <= n; ++i)
    q.indecomposables.push_back({id_of(i), i == 0, EndoDescriptor{"k", i == n ? 1 : 0}});
  for (int j = 1; j <= n; ++j) {
    ARSequence s{id_of(j), {}, id_of(j)};
    s.middle[id_of(j - 1)] += 1;
    s.middle[id_of(j < n ? j + 1 : n)] += 1;
    q.sequences.push_back(std::move(s));
  }
  return q;
}

CatalogueEntry catalogue_entry(std::string_view family, int n) {
  std::string f(family);
  std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::tolower(c); });
  if (f != "a2n")
    throw InputError("unknown catalogue family '" + std::string(family) + "' (known: a2n)");
  return {"a2n", n, a2n_quiver(n),
          "AR sequences fixed as the middle terms whose relation vectors reproduce the "
          "closed-form T: M(j-1) + M(j+1) for 0 < j < n, M(n-1) + Mn for j = n"};
}

ARQuiver parse_quiver(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw ParseError("", e.what());
  }
  return from_json(doc);
}

std::string serialize_quiver(const ARQuiver &q) {
  ordered_json doc;
  doc["name"] = q.name;
  doc["indecomposables"] = ordered_json::array();
  for (const auto &m : q.indecomposables) {
    ordered_json item;
    item["id"] = m.id;
    item["projective"] = m.projective;
    if (m.endo)
      item["endo"] = {{"residue", m.endo->residue}, {"radical_dim", m.endo->radical_dim}};
    doc["indecomposables"].push_back(std::move(item));
  }
  doc["ar_sequences"] = ordered_json::array();
  for (const auto &s : q.sequences) {
    // Middle terms in quiver order, then any unknown ids lexically.
    ordered_json middle = ordered_json::object();
    for (const auto &m : q.indecomposables)
      if (auto it = s.middle.find(m.id); it != s.middle.end())
        middle[m.id] = it->second;
    for (const auto &[id, count] : s.middle)
      if (!q.contains(id))
        middle[id] = count;
    ordered_json item;
    item["target"] = s.target;
    item["middle"] = std::move(middle);
    item["left"] = s.left;
    doc["ar_sequences"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

ARQuiver load_quiver(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open quiver file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_quiver(buf.str());
  } catch (const ParseError &e) {
    throw ParseError(e.field(), e.detail() + " (in " + path.string() + ")");
  }
}

void save_quiver(const ARQuiver &q, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw InputError("cannot write quiver file " + path.string());
  out << serialize_quiver(q);
  if (!out)
    throw InputError("write failed for " + path.string());
}

} // namespace cmk
