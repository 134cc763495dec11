#include "cmk/cli.hpp"

#include "cmk/catalogue.hpp"
#include "cmk/errors.hpp"
#include "cmk/ktheory.hpp"
#include "cmk/localization.hpp"
#include "cmk/report.hpp"
#include "table.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace cmk::cli {
namespace {

const std::vector<std::string> verbs = {"k0prime", "k0mf",     "armatrix",   "det",
                                        "k1prime", "k1mf",     "k1cat",      "localize",
                                        "filtration", "catalogue", "check"};

struct Options {
  std::string verb;
  std::string input;
  std::string format = "json";
  std::string coefficients_text;
  std::optional<std::string> subcat;
  std::optional<std::string> ordering;
  std::optional<std::string> sweep;
  std::optional<int> n;
  std::string output;
  bool hypersurface = false;

  CoefficientSpec coefficients;
  std::vector<int> parameters; // catalogue parameters when a family is given
};

// What one verb produced for one quiver.
struct Outcome {
  Json result;
  std::string table;
  std::vector<std::string> notes;
  bool failed = false; // `check` found violations
};

bool uses_coefficients(const std::string &verb) {
  return verb == "k1prime" || verb == "k1mf" || verb == "k1cat" || verb == "filtration";
}

std::vector<std::string> split_ids(const std::string &text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos)
      throw InputError("empty id in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

int parse_int(const std::string &s, const std::string &what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (s.empty() || used != s.size())
    throw InputError(what + ": '" + s + "' is not an integer");
  return v;
}

std::vector<int> parse_sweep(std::string text) {
  if (text.rfind("n=", 0) == 0)
    text.erase(0, 2);
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw InputError("--sweep expects a..b, got '" + text + "'");
  const int a = parse_int(text.substr(0, dots), "--sweep");
  const int b = parse_int(text.substr(dots + 2), "--sweep");
  if (a < 1 || b < a)
    throw InputError("--sweep range " + text + " must satisfy 1 <= a <= b");
  std::vector<int> out;
  for (int i = a; i <= b; ++i)
    out.push_back(i);
  return out;
}

void reject(bool given, const std::string &flag, const std::string &verb) {
  if (given)
    throw InputError(flag + " does not apply to '" + verb + "'");
}

// Every check that needs no quiver data happens here, before any work.
void validate_options(Options &o) {
  if (o.format != "json" && o.format != "table")
    throw InputError("--format must be json or table, got '" + o.format + "'");
  if (o.input.empty())
    throw InputError("missing input: a quiver path, '-' for stdin, or a catalogue family");

  reject(!o.coefficients_text.empty() && !uses_coefficients(o.verb), "--coefficients", o.verb);
  o.coefficients = o.coefficients_text.empty() ? CoefficientSpec::symbolic()
                                               : CoefficientSpec::parse(o.coefficients_text);
  reject(o.subcat.has_value() && o.verb != "localize", "--subcat", o.verb);
  if (o.verb == "localize" && !o.subcat)
    throw InputError("localize needs --subcat id,id,... (an empty list is allowed)");
  reject(o.ordering.has_value() && o.verb != "filtration", "--ordering", o.verb);
  reject(o.hypersurface && o.verb != "k0mf", "--hypersurface", o.verb);
  reject(o.sweep.has_value() && o.verb == "catalogue", "--sweep", o.verb);
  reject(o.sweep.has_value() && o.verb == "check", "--sweep", o.verb);

  if (o.n && o.sweep)
    throw InputError("--n and --sweep are mutually exclusive");
  if (o.n) {
    if (*o.n < 1)
      throw InputError("--n must be positive, got " + std::to_string(*o.n));
    o.parameters = {*o.n};
  } else if (o.sweep) {
    o.parameters = parse_sweep(*o.sweep);
  } else if (o.verb == "catalogue") {
    throw InputError("catalogue needs --n N");
  }
  if (!o.parameters.empty())
    catalogue_entry(o.input, o.parameters.front()); // rejects unknown families early
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json hashes(const ARQuiver &q) {
  if (!validate(q).ok())
    return Json::object();
  return {{"T", ar_matrix(q).matrix.hash()}, {"T'", deleted_ar_matrix(q).matrix.hash()}};
}

std::string presentation_table(const std::string &title, const K1Presentation &p) {
  std::vector<Row> rows{{title, p.expression.to_string()}};
  if (p.instantiated)
    rows.push_back({"instantiated", p.instantiated->to_string()});
  if (p.coefficients.is_finite())
    rows.push_back({"group", p.group ? p.group->to_string() : "not determined"});
  for (const auto &o : p.opaque)
    rows.push_back({"opaque", o});
  std::string out = render_table(rows);
  out += "  certificate\n";
  for (const auto &line : p.certificate)
    out += "    " + line + "\n";
  return out;
}

std::set<std::string> subset_of(const std::string &text) {
  if (text.empty())
    return {};
  const auto ids = split_ids(text);
  return {ids.begin(), ids.end()};
}

Outcome evaluate(const Options &o, const ARQuiver &q) {
  Outcome r;
  const auto &verb = o.verb;
  const auto &c = o.coefficients;
  if (verb == "k0prime") {
    const auto g = k0_prime(q);
    r.result = to_json(g);
    r.table = render_table({{"K0'(R)", g.to_string()}});
  } else if (verb == "k0mf") {
    const auto k = k0_mf(q, o.hypersurface);
    r.result = to_json(k.group);
    r.notes = k.warnings;
    r.table = render_table({{"K0(MF)", k.group.to_string()}});
  } else if (verb == "armatrix") {
    const auto t = ar_matrix(q);
    const auto tp = deleted_ar_matrix(q);
    r.result = {{"T", to_json(t)}, {"T'", to_json(tp)}};
    r.table = "  T (rows: indecomposables, columns: AR sequences by end term)\n" +
              render_matrix(t, "    ") + "  T' (projective row deleted)\n" +
              render_matrix(tp, "    ");
  } else if (verb == "det") {
    const auto d = det_deleted_matrix(q);
    r.result = to_json(d);
    r.table = render_table({{"det T'", d.det.get_str()}, {"positive", yes_no(d.positive)}});
  } else if (verb == "k1prime" || verb == "k1mf" || verb == "k1cat") {
    const auto p = verb == "k1prime" ? k1_prime_presentation(q, c)
                   : verb == "k1mf"  ? k1_mf_presentation(q, c)
                                     : k1_additive_category(q, c);
    r.result = to_json(p);
    r.notes = p.notes;
    const char *title = verb == "k1prime" ? "K1'(R)" : verb == "k1mf" ? "K1(MF)" : "K1(C+)";
    r.table = presentation_table(title, p);
  } else if (verb == "localize") {
    const auto subset = subset_of(*o.subcat);
    const auto s = k0_localization_sequence(q, subset);
    const auto view = semiperfect_view(q, subset);
    r.result = to_json(s);
    std::vector<std::string> lines;
    std::stringstream ss(view);
    for (std::string line; std::getline(ss, line);)
      lines.push_back(line);
    r.result["semiperfect_view"] = lines;
    std::vector<Row> rows{{"node", "group", "exact here"}};
    for (std::size_t i = 0; i < s.node_groups.size(); ++i) {
      std::string here = "-";
      if (i > 0 && i <= s.exact_at.size())
        here = yes_no(s.exact_at[i - 1]);
      else if (i + 1 == s.node_groups.size())
        here = s.surjective_end ? "surjects" : "not onto";
      rows.push_back({s.node_labels[i], s.node_groups[i].to_string(), here});
    }
    r.table = render_table(rows) + "  sequence " + (s.exact() ? "exact" : "NOT exact") + "\n" + view;
  } else if (verb == "filtration") {
    std::vector<std::string> ordering;
    if (o.ordering)
      ordering = split_ids(*o.ordering);
    const auto f = filtration_report(q, ordering, c);
    r.result = to_json(f);
    std::vector<Row> rows{{"step", "subquotient", "radical_dim", "K1", "instantiated", "note"}};
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
      const auto &s = f.steps[i];
      rows.push_back({std::to_string(i), s.subquotient,
                      s.endo ? std::to_string(s.endo->radical_dim) : "-", s.k1.to_string(),
                      s.instantiated ? s.instantiated->to_string() : "-", s.note});
    }
    r.table = render_table(rows, {true});
    if (c.is_finite())
      r.notes.emplace_back(formal_instantiation_note);
  } else if (verb == "check") {
    const auto v = validate(q);
    r.result = to_json(v);
    r.failed = !v.ok();
    std::vector<Row> rows{{"valid", yes_no(v.ok())}};
    for (const auto &x : v.violations)
      rows.push_back({x.code, x.detail});
    r.table = render_table(rows);
  }
  return r;
}

std::string catalogue_table(const CatalogueEntry &e) {
  std::vector<Row> rows{{"id", "projective", "radical_dim"}};
  for (const auto &m : e.quiver.indecomposables)
    rows.push_back({m.id, yes_no(m.projective), m.endo ? std::to_string(m.endo->radical_dim) : "-"});
  std::string out = "  " + e.quiver.name + " (" + e.family + ", n = " +
                    std::to_string(e.parameter) + ")\n" + render_table(rows);
  out += "  AR sequences\n";
  for (const auto &s : e.quiver.sequences) {
    std::string middle;
    for (const auto &id : e.quiver.ids())
      if (auto it = s.middle.find(id); it != s.middle.end())
        middle += (middle.empty() ? "" : " + ") + (it->second == 1 ? "" : std::to_string(it->second)) + id;
    out += "    0 -> " + s.left + " -> " + (middle.empty() ? "0" : middle) + " -> " + s.target +
           " -> 0\n";
  }
  return out + "  " + e.notes + "\n";
}

std::string render(const Options &o, const ARQuiver &q, const Outcome &r, bool heading) {
  if (o.format == "table") {
    std::string out;
    if (heading)
      out += "== " + q.name + "\n";
    out += o.verb + " " + q.name + "\n" + r.table;
    for (const auto &n : r.notes)
      out += "  note: " + n + "\n";
    return out;
  }
  Json envelope;
  envelope["verb"] = o.verb;
  envelope["quiver"] = q.name;
  envelope["hashes"] = hashes(q);
  envelope["coefficients"] = uses_coefficients(o.verb) ? Json(o.coefficients.to_string()) : Json();
  envelope["result"] = r.result;
  envelope["notes"] = r.notes;
  return envelope.dump() + "\n";
}

ARQuiver read_input(const std::string &input, std::istream &in) {
  if (input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_quiver(ss.str());
  }
  return load_quiver(input);
}

// Returns the process exit code; text goes to `out`.
int execute(const Options &o, std::istream &in, std::ostream &out) {
  if (o.verb == "catalogue") {
    const auto e = catalogue_entry(o.input, o.parameters.front());
    out << (o.format == "json" ? serialize_quiver(e.quiver) : catalogue_table(e));
    return ExitCode::ok;
  }

  if (o.parameters.empty()) {
    const auto q = read_input(o.input, in);
    const auto r = evaluate(o, q);
    out << render(o, q, r, false);
    if (r.failed)
      throw InputError("invalid quiver: " + validate(q).summary());
    return ExitCode::ok;
  }

  // Catalogue sweep: entries are independent, so evaluate them concurrently
  // and emit in parameter order.
  std::vector<std::future<std::string>> jobs;
  for (int n : o.parameters)
    jobs.push_back(std::async(std::launch::async, [&o, n, many = o.parameters.size() > 1] {
      const auto q = catalogue_entry(o.input, n).quiver;
      return render(o, q, evaluate(o, q), many && o.format == "table");
    }));
  std::vector<std::string> pieces;
  for (auto &j : jobs)
    pieces.push_back(j.get());
  for (const auto &p : pieces)
    out << p;
  return ExitCode::ok;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"K-theory of finite Cohen-Macaulay type rings from AR quiver data", "cmk"};
  Options o;
  app.add_option("verb", o.verb, "what to compute")->required()->check(CLI::IsMember(verbs));
  app.add_option("input", o.input, "quiver JSON path, '-' for stdin, or a catalogue family (a2n)");
  app.add_option("--format", o.format, "json (default) or table");
  app.add_option("--coefficients", o.coefficients_text, "symbolic or ff:q");
  app.add_option("--subcat", o.subcat, "comma-separated ids spanning the subcategory B");
  app.add_option("--ordering", o.ordering, "filtration order, projective first");
  app.add_option("--n", o.n, "catalogue parameter");
  app.add_option("--sweep", o.sweep, "catalogue parameter range a..b");
  app.add_option("-o,--output", o.output, "write the report here instead of stdout");
  app.add_flag("--hypersurface", o.hypersurface, "assert R = S/(w) for k0mf");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << one_line(e.what()) << "\n";
    return ExitCode::input_error;
  }

  try {
    validate_options(o);
    if (o.output.empty())
      return execute(o, in, out);
    std::ostringstream buffer;
    const int code = execute(o, in, buffer);
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush())
      throw InputError("cannot write '" + o.output + "'");
    return code;
  } catch (const ParseError &e) {
    err << "error: parse error at " << (e.field().empty() ? "<document>" : e.field()) << ": "
        << one_line(e.detail()) << "\n";
    return ExitCode::input_error;
  } catch (const InputError &e) {
    err << "error: " << one_line(e.what()) << "\n";
    return ExitCode::input_error;
  } catch (const Refusal &e) {
    err << "refused: " << one_line(e.what()) << "\n";
    return ExitCode::refused;
  } catch (const std::exception &e) {
    err << "internal error: " << one_line(e.what()) << "\n";
    return ExitCode::internal_error;
  }
}

} // namespace cmk::cli
