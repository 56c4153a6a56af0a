#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cdindex/complexes.hpp"
#include "cdindex/flagcd.hpp"
#include "cdindex/io.hpp"
#include "cdindex/subdivision.hpp"
#include "cdindex/torich.hpp"

namespace cdindex::cli {

using io::Json;

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string input = "-";
  std::uint64_t seed = 0;
  int jobs = 1;
  bool json() const { return format == "json"; }
};

std::string read_input(const Options& opt, std::istream& in) {
  std::ostringstream buf;
  if (opt.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) throw IoFailure("cannot open '" + opt.input + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

Json report(const char* command) {
  Json j;
  j["schema"] = io::kSchema;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string rank_set(const FlagVector& v, std::uint64_t m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < v.n; ++i)
    if (m >> i & 1U) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

Json verdicts_of(const GradedPoset& p) {
  Json v;
  v["graded"] = p.is_graded();
  const bool bounded = p.is_graded() && p.has_min() && p.has_max();
  v["eulerian"] = bounded && is_eulerian(p);
  v["near_eulerian"] = bounded && is_near_eulerian(p);
  return v;
}

// ---- compute ----------------------------------------------------------------

int cmd_compute(const Options& opt, const std::string& what, const Json& in, std::ostream& out) {
  const GradedPoset p = io::poset_from_json(in);
  Json rep = report("compute");
  rep["what"] = what;
  rep["verdicts"] = verdicts_of(p);
  if (what == "flagf" || what == "flagh") {
    const FlagVector v = what == "flagf" ? flag_f(p) : flag_h(p);
    if (opt.json()) {
      rep["n"] = v.n;
      rep[what == "flagf" ? "flag_f" : "flag_h"] = io::to_json(v);
      emit(out, rep);
    } else {
      for (std::uint64_t m = 0; m < v.values.size(); ++m) out << rank_set(v, m) << ' ' << v.values[m] << '\n';
    }
  } else if (what == "flag" || what == "ab") {
    const AbPolynomial a = what == "flag" ? flag_polynomial(p) : ab_index(p);
    rep[what] = io::to_json(a);
    rep["text"] = to_text(a);
    if (opt.json()) emit(out, rep);
    else out << to_text(a) << '\n';
  } else if (what == "cd") {
    const CdPolynomial c = cd_index(p);
    rep["cd"] = io::to_json(c);
    rep["text"] = to_text(c);
    if (opt.json()) emit(out, rep);
    else out << to_text(c) << '\n';
  } else {
    const LocalIndex li = local_index(p);
    if (opt.json()) {
      rep["ab"] = io::to_json(li.ab);
      rep["cd"] = io::to_json(li.cd);
      rep["flag"] = io::to_json(li.flag);
      emit(out, rep);
    } else {
      out << "ab: " << to_text(li.ab) << "\ncd: " << to_text(li.cd) << "\nflag: " << to_text(li.flag) << '\n';
    }
  }
  return kExitOk;
}

// ---- verify -------------------------------------------------------------------

std::optional<std::string> eulerian_witness(const GradedPoset& p) {
  if (!p.is_graded()) return "not graded";
  if (!p.has_min() || !p.has_max()) return "missing 0̂ or 1̂";
  const Bitset& even = p.even_rank_mask();
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t t = 0; t < p.size(); ++t) {
      const Index a = static_cast<Index>(s), b = static_cast<Index>(t);
      if (a == b || !p.leq(a, b)) continue;
      const auto total = p.up(a).and_count(p.down(b));
      const auto ev = p.up(a).and_count(p.down(b), even);
      if (2 * ev != total)
        return "interval ['" + p.id(a) + "', '" + p.id(b) + "'] has " + std::to_string(ev) + " even-rank and " +
               std::to_string(total - ev) + " odd-rank elements";
    }
  return std::nullopt;
}

std::optional<std::string> lower_eulerian_witness(const GradedPoset& p) {
  if (!p.is_graded()) return "not graded";
  if (!p.has_min()) return "missing 0̂";
  for (std::size_t t = 0; t < p.size(); ++t)
    if (auto w = eulerian_witness(p.interval(p.min(), static_cast<Index>(t)))) return *w;
  return std::nullopt;
}

int cmd_verify(const Options& opt, const std::string& property, const Json& in, std::ostream& out) {
  Json rep = report("verify");
  rep["property"] = property;
  std::vector<std::string> reasons;
  Json extra;
  if (property == "graded" || property == "eulerian" || property == "lower-eulerian") {
    const GradedPoset p = io::poset_from_json(in);
    std::optional<std::string> w;
    if (property == "graded") {
      if (!p.is_graded()) w = "maximal chains of different lengths";
    } else {
      w = property == "eulerian" ? eulerian_witness(p) : lower_eulerian_witness(p);
    }
    if (w) reasons.push_back(*w);
  } else if (property == "gorenstein") {
    const SimplicialComplex k = io::complex_from_json(in);
    if (!k.is_pure()) reasons.push_back("complex is not pure");
    else if (!is_gorenstein(k)) reasons.push_back("some link does not have the homology of a sphere");
  } else if (property == "shelling") {
    const SimplicialComplex k = io::complex_from_json(in);
    const ShellingSearch s = find_shelling(k, opt.seed);
    extra["nodes"] = s.nodes;
    if (s.status == ShellingStatus::Found) {
      Json order = Json::array();
      for (const auto& f : s.order) order.push_back(k.face_id(f));
      extra["order"] = order;
    } else if (s.status == ShellingStatus::Exhausted) {
      reasons.push_back("no shelling order exists");
    } else {
      reasons.push_back("search cut off after " + std::to_string(s.nodes) + " nodes");
    }
  } else {
    const SubdivisionMap m = io::subdivision_from_json(in);
    const ValidationReport& v = property == "strong-eulerian" ? m.strong_eulerian() : m.strong_formal();
    reasons = v.failures;
    if (!v.ok && reasons.empty()) reasons.push_back("validation failed");
  }
  const bool ok = reasons.empty();
  if (opt.json()) {
    rep["ok"] = ok;
    rep["reasons"] = reasons;
    for (const auto& [k, v] : extra.items()) rep[k] = v;
    emit(out, rep);
  } else {
    out << property << ": " << (ok ? "true" : "false") << '\n';
    for (const auto& r : reasons) out << "  " << r << '\n';
    if (extra.contains("order")) {
      out << "  order:";
      for (const auto& f : extra["order"]) out << ' ' << f.get<std::string>();
      out << '\n';
    }
  }
  return ok ? kExitOk : kExitValidation;
}

// ---- subdivision commands -------------------------------------------------------

int cmd_decompose(const Options& opt, bool all, const Json& in, std::ostream& out) {
  const SubdivisionMap m = io::subdivision_from_json(in);
  const Decomposition d = decompose_cd(m, opt.jobs);
  if (opt.json()) {
    Json rep = report("decompose");
    rep["verdicts"] = {{"strong_eulerian", true}};
    Json rows = Json::array();
    for (const auto& r : d.rows) {
      if (!all && r.local.cd.is_zero()) continue;
      rows.push_back({{"sigma", r.id}, {"rank", r.rank}, {"local_cd", io::to_json(r.local.cd)},
                      {"upper_cd", io::to_json(r.upper)}});
    }
    rep["rows"] = rows;
    rep["total"] = io::to_json(d.total);
    rep["source_cd"] = io::to_json(d.source_cd);
    emit(out, rep);
    return kExitOk;
  }
  std::vector<std::vector<std::string>> table{{"sigma", "rank", "local_cd", "upper_cd"}};
  for (const auto& r : d.rows) {
    if (!all && r.local.cd.is_zero()) continue;
    table.push_back({r.id, std::to_string(r.rank), to_text(r.local.cd), to_text(r.upper)});
  }
  out << "strong_eulerian: true\n";
  print_table(out, table);
  out << "total: " << to_text(d.total) << '\n';
  return kExitOk;
}

int cmd_localh(const Options& opt, const Json& in, std::ostream& out) {
  const SubdivisionMap m = io::subdivision_from_json(in);
  const LocalHTable t = local_h(m, opt.jobs);
  if (opt.json()) {
    Json rep = report("localh");
    rep["verdicts"] = {{"strong_formal", true}};
    Json rows = Json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"sigma", r.id}, {"rank", r.rank}, {"ell", io::to_json(r.ell)}, {"text", to_text(r.ell)}});
    rep["rows"] = rows;
    if (t.has_total) rep["h"] = io::to_json(t.total);
    emit(out, rep);
    return kExitOk;
  }
  std::vector<std::vector<std::string>> table{{"sigma", "rank", "local_h"}};
  for (const auto& r : t.rows) table.push_back({r.id, std::to_string(r.rank), to_text(r.ell)});
  out << "strong_formal: true\n";
  print_table(out, table);
  if (t.has_total) out << "h: " << to_text(t.total) << '\n';
  return kExitOk;
}

// ---- toric / morphism -------------------------------------------------------------

int cmd_toric(const Options& opt, const std::string& what, const Json& in, std::ostream& out) {
  const GradedPoset p = io::poset_from_json(in);
  Json rep = report("toric");
  rep["verdicts"] = verdicts_of(p);
  std::optional<UniPolynomial> g, h;
  if (what != "h") g = g_poly(p);
  if (what != "g") h = p.has_max() ? toric_h(p) : h_poly(p);
  if (opt.json()) {
    if (g) rep["g"] = io::to_json(*g);
    if (h) rep["h"] = io::to_json(*h);
    emit(out, rep);
  } else {
    if (g) out << "g: " << to_text(*g) << '\n';
    if (h) out << "h: " << to_text(*h) << '\n';
  }
  return kExitOk;
}

int cmd_morphism(const Options& opt, const std::string& map, const std::string& poly, const std::string& cd,
                 std::istream& in, std::ostream& out) {
  Morphism mor;
  UniPolynomial value;
  const bool want_f = map == "f";
  if (!poly.empty()) {
    const AbPolynomial a = parse_ab(poly);
    value = want_f ? mor.f(a) : mor.g(a);
  } else if (!cd.empty()) {
    const CdPolynomial c = parse_cd(cd);
    value = want_f ? mor.f(c) : mor.g(c);
  } else {
    const Json j = io::parse(read_input(opt, in));
    AbPolynomial a;
    if (j.is_object() && j.contains("ab")) a = io::ab_from_json(j["ab"]);
    else if (j.is_object() && j.contains("cd")) a = expand_cd(io::cd_from_json(j["cd"]));
    else a = ab_index(io::poset_from_json(j));
    value = want_f ? mor.f(a) : mor.g(a);
  }
  if (opt.json()) {
    Json rep = report("morphism");
    rep["map"] = map;
    rep["value"] = io::to_json(value);
    rep["text"] = to_text(value);
    emit(out, rep);
  } else {
    out << to_text(value) << '\n';
  }
  return kExitOk;
}

// ---- generate -------------------------------------------------------------------------

struct GenerateArgs {
  std::string shape;
  std::optional<int> dim, n, k;
  std::string of = "simplex";
};

int need(const std::optional<int>& v, const char* flag, const std::string& shape) {
  if (!v) throw UsageFailure("--shape " + shape + " needs " + flag);
  return *v;
}

int cmd_generate(const Options& opt, const GenerateArgs& a, std::ostream& out) {
  Json body;
  if (a.shape == "simplex") {
    body = io::to_json(make_simplex(need(a.dim, "--dim", a.shape)), false);
  } else if (a.shape == "boundary") {
    body = io::to_json(make_boundary_simplex(need(a.dim, "--dim", a.shape)), true);
  } else if (a.shape == "polygon") {
    body = io::to_json(make_polygon(need(a.n, "--n", a.shape)), true);
  } else if (a.shape == "cube") {
    body = io::to_json(make_cube3());
  } else if (a.shape == "boolean") {
    body = io::to_json(make_boolean(need(a.n, "--n", a.shape)));
  } else if (a.shape == "stacked") {
    body = io::to_json(make_stacked(need(a.dim, "--dim", a.shape), need(a.k, "--k", a.shape), opt.seed).boundary,
                       true);
  } else {
    const int d = need(a.dim, "--dim", a.shape);
    body = io::to_json(a.of == "simplex" ? barycentric_map(make_simplex(d), false)
                                         : barycentric_map(make_boundary_simplex(d), true));
  }
  Json j;
  j["schema"] = io::kSchema;
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(out, j);
  return kExitOk;
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::CycleDetected:
    case ErrorKind::UnknownElement:
    case ErrorKind::FaceNotFound:
      return kExitIo;
    default:
      return kExitValidation;
  }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag enumeration, cd-index and toric h invariants of graded posets", "cdindex"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--input", opt.input, "Input JSON file, '-' for standard input");
  app.add_option("--seed", opt.seed, "Seed for randomized searches");
  app.add_option("--jobs", opt.jobs, "Worker threads for per-element work")->check(CLI::PositiveNumber);

  std::string what_compute = "cd", property, what_toric = "both", map = "f", poly, cd;
  bool all_rows = false;
  GenerateArgs gen;

  auto* compute = app.add_subcommand("compute", "Flag vectors, ab-, cd- and local indices of a poset");
  compute->add_option("--what", what_compute)
      ->check(CLI::IsMember({"flagf", "flagh", "flag", "ab", "cd", "local"}));
  auto* verify = app.add_subcommand("verify", "Check a structural property; exit 2 when it fails");
  verify->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"graded", "eulerian", "lower-eulerian", "gorenstein", "shelling", "strong-eulerian",
                             "strong-formal"}));
  auto* decompose = app.add_subcommand("decompose", "cd-index of a subdivision, row by base element");
  decompose->add_flag("--all", all_rows, "Also list rows with zero local cd-index");
  auto* toric = app.add_subcommand("toric", "Toric g- and h-polynomials");
  toric->add_option("--what", what_toric)->check(CLI::IsMember({"g", "h", "both"}));
  app.add_subcommand("localh", "Local h-polynomials of a subdivision");
  auto* morphism = app.add_subcommand("morphism", "Apply the f or g morphism to an ab-index");
  morphism->add_option("--map", map)->check(CLI::IsMember({"f", "g"}));
  morphism->add_option("--poly", poly, "ab-polynomial text, instead of --input");
  morphism->add_option("--cd", cd, "cd-polynomial text, instead of --input");
  auto* generate = app.add_subcommand("generate", "Write a standard poset, complex or subdivision as JSON");
  generate->add_option("--shape", gen.shape)
      ->required()
      ->check(CLI::IsMember({"simplex", "boundary", "polygon", "cube", "boolean", "stacked", "barycentric"}));
  generate->add_option("--dim", gen.dim);
  generate->add_option("--n", gen.n);
  generate->add_option("--k", gen.k);
  generate->add_option("--of", gen.of, "Barycentric subdivision of the simplex boundary or the solid simplex")
      ->check(CLI::IsMember({"boundary", "simplex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "generate") return cmd_generate(opt, gen, out);
    if (name == "morphism") return cmd_morphism(opt, map, poly, cd, in, out);
    const Json input = io::parse(read_input(opt, in));
    if (name == "compute") return cmd_compute(opt, what_compute, input, out);
    if (name == "verify") return cmd_verify(opt, property, input, out);
    if (name == "decompose") return cmd_decompose(opt, all_rows, input, out);
    if (name == "toric") return cmd_toric(opt, what_toric, input, out);
    return cmd_localh(opt, input, out);
  } catch (const UsageFailure& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}

}  // namespace cdindex::cli
