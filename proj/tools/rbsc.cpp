// rbsc: stratification calculator for reductive Borel-Serre boundaries.
// Subcommands: describe, link, ext, ext-table, detect-middle, paper-check.
// Exit codes: 0 success, 1 computational mismatch, 2 configuration error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbs/errors.hpp"
#include "rbs/ext.hpp"
#include "rbs/reference.hpp"

using nlohmann::json;
using namespace rbs;

namespace {

struct Options {
  std::string config_path;
  std::string group;
  std::string perversity = "minus";
  std::string format = "text";
  std::string dim_overrides_path;
  std::string stratum;
  std::string target;
  std::string weight;
  std::string target_weight;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Flat key = value configuration; values are JSON scalars. Command-line
// flags override anything set here.
void load_config(const std::string& path, Options& opt) {
  std::ifstream in(path);
  require(in.good(), "cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = path + ":" + std::to_string(lineno);
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const size_t eq = t.find('=');
    require(eq != std::string::npos, where + ": expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    const std::string raw = trim(t.substr(eq + 1));
    std::string value;
    try {
      const json v = json::parse(raw);
      require(!v.is_object() && !v.is_array(),
              where + ": field '" + key + "' must be a JSON scalar");
      value = v.is_string() ? v.get<std::string>() : v.dump();
    } catch (const json::exception& e) {
      throw invalid_input(where + ": field '" + key +
                          "' is not a JSON value (" + e.what() + ")");
    }
    if (key == "group")
      opt.group = value;
    else if (key == "perversity")
      opt.perversity = value;
    else if (key == "format")
      opt.format = value;
    else if (key == "dim-overrides")
      opt.dim_overrides_path = value;
    else if (key == "stratum")
      opt.stratum = value;
    else if (key == "target")
      opt.target = value;
    else if (key == "weight")
      opt.weight = value;
    else if (key == "target-weight")
      opt.target_weight = value;
    else
      throw invalid_input(where + ": unknown key '" + key + "'");
  }
}

DimMap load_dim_overrides(const std::string& path, int rank) {
  std::ifstream in(path);
  require(in.good(), "cannot open dim-overrides file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw invalid_input("dim-overrides file '" + path + "': " + e.what());
  }
  require(doc.is_object(),
          "dim-overrides file '" + path +
              "' must be a JSON object keyed by stratum literal");
  DimMap out;
  for (const auto& [key, val] : doc.items()) {
    require(val.is_number_integer(), "dim-overrides entry '" + key +
                                         "' must be an integer dimension");
    out[StratumId::parse(key, rank).subset] = val.get<int>();
  }
  return out;
}

struct Context {
  RootSystem R;
  DimMap dims;
  Perversity p;
};

Context make_context(const Options& opt) {
  require(!opt.group.empty(), "--group is required (e.g. C2, A3, B3)");
  require(opt.format == "text" || opt.format == "json",
          "--format must be 'text' or 'json'");
  Context cx{build_root_system(opt.group), {}, {}};
  DimMap overrides;
  if (!opt.dim_overrides_path.empty())
    overrides = load_dim_overrides(opt.dim_overrides_path, cx.R.rank);
  cx.dims = stratum_dims(cx.R, overrides);
  PerversityKind kind;
  if (opt.perversity == "minus")
    kind = PerversityKind::minus;
  else if (opt.perversity == "plus")
    kind = PerversityKind::plus;
  else
    throw invalid_input("--perversity must be 'minus' or 'plus', got '" +
                        opt.perversity + "'");
  cx.p = perversity(cx.R, kind, cx.dims);
  return cx;
}

Subset parse_subset(const std::string& literal, const RootSystem& R,
                    const char* flag) {
  require(!literal.empty(), std::string(flag) +
                                " is required (a subset literal such as "
                                "\"{1}\", \"{}\", or \"full\")");
  return StratumId::parse(literal, R.rank).subset;
}

const char* kLetters[] = {"a", "b", "c", "d", "g", "h"};

Weight default_symbolic_weight(const RootSystem& R, const Subset& T) {
  Weight out;
  out.symbols.resize(R.rank);
  out.coords.resize(R.rank);
  for (int i = 0; i < R.rank; ++i) {
    out.symbols[i] = {kLetters[i], std::binary_search(T.begin(), T.end(), i)};
    LinForm f;
    f.constant = 0;
    f.coeffs.assign(R.rank, Rat(0));
    f.coeffs[i] = 1;
    out.coords[i] = std::move(f);
  }
  return out;
}

bool numeric_token(const std::string& t) {
  if (t.empty()) return false;
  size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  return t.find_first_not_of("0123456789", i) == std::string::npos;
}

bool symbol_token(const std::string& t) {
  if (t.empty() || !std::isalpha(static_cast<unsigned char>(t[0])))
    return false;
  for (char c : t)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
      return false;
  return true;
}

struct WeightSpec {
  std::string text;     // comma-separated coordinates
  Subset declared;      // stratum whose Levi the weight belongs to
  const char* flag;
};

// Parse several weight literals over one shared symbol table, so that
// symbolic weights from different flags are directly comparable. A symbol
// sitting on a dominance-constrained coordinate is marked nonnegative.
std::vector<Weight> parse_weights(const RootSystem& R,
                                  const std::vector<WeightSpec>& specs) {
  std::vector<std::vector<std::string>> tokens(specs.size());
  for (size_t s = 0; s < specs.size(); ++s) {
    require(!specs[s].text.empty(),
            std::string(specs[s].flag) + " is required (e.g. \"1,1\" or "
                                         "symbolic \"a,b\")");
    std::stringstream ss(specs[s].text);
    std::string tok;
    while (std::getline(ss, tok, ',')) tokens[s].push_back(trim(tok));
    require(static_cast<int>(tokens[s].size()) == R.rank,
            std::string(specs[s].flag) + ": weight '" + specs[s].text +
                "' must have " + std::to_string(R.rank) +
                " comma-separated coordinates");
  }
  std::vector<Symbol> symbols;
  auto symbol_index = [&](const std::string& name) {
    for (size_t k = 0; k < symbols.size(); ++k)
      if (symbols[k].name == name) return k;
    symbols.push_back({name, false});
    return symbols.size() - 1;
  };
  for (size_t s = 0; s < specs.size(); ++s)
    for (int i = 0; i < R.rank; ++i) {
      const std::string& t = tokens[s][i];
      if (numeric_token(t)) continue;
      require(symbol_token(t), std::string(specs[s].flag) +
                                   ": coordinate '" + t +
                                   "' is neither an integer nor a symbol");
      const size_t k = symbol_index(t);
      if (std::binary_search(specs[s].declared.begin(),
                             specs[s].declared.end(), i))
        symbols[k].nonneg = true;
    }
  std::vector<Weight> out;
  for (size_t s = 0; s < specs.size(); ++s) {
    Weight w;
    w.symbols = symbols;
    w.coords.resize(R.rank);
    for (int i = 0; i < R.rank; ++i) {
      LinForm f;
      f.coeffs.assign(symbols.size(), Rat(0));
      const std::string& t = tokens[s][i];
      if (numeric_token(t))
        f.constant = Rat(Int(t));
      else
        f.coeffs[symbol_index(t)] = 1;
      w.coords[i] = std::move(f);
    }
    require(is_integral(w), std::string(specs[s].flag) + ": weight '" +
                                specs[s].text + "' must be integral");
    require(is_dominant(R, specs[s].declared, w),
            std::string(specs[s].flag) + ": weight '" + specs[s].text +
                "' is not dominant for stratum " +
                StratumId{specs[s].declared}.literal(R.rank));
    out.push_back(std::move(w));
  }
  return out;
}

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (opt.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

json table_json(const GradedModuleList& list) {
  json arr = json::array();
  for (const auto& e : list.entries)
    arr.push_back({{"degree", e.degree},
                   {"weight", to_string(e.weight)},
                   {"multiplicity", e.multiplicity}});
  return arr;
}

std::string table_text(const GradedModuleList& list, const std::string& head) {
  std::ostringstream os;
  os << head << "\n";
  if (list.entries.empty()) {
    os << "  (zero)\n";
    return os.str();
  }
  os << "  degree  multiplicity  weight\n";
  for (const auto& e : list.entries) {
    std::string deg = std::to_string(e.degree);
    std::string mult = std::to_string(e.multiplicity);
    os << "  " << deg << std::string(deg.size() < 8 ? 8 - deg.size() : 1, ' ')
       << mult << std::string(mult.size() < 14 ? 14 - mult.size() : 1, ' ')
       << to_string(e.weight) << "\n";
  }
  return os.str();
}

int cmd_describe(const Options& opt) {
  const Context cx = make_context(opt);
  const auto lat = parabolic_lattice(cx.R, cx.dims);
  const auto subsets = all_subsets(cx.R.rank);

  json strata = json::array();
  std::ostringstream text;
  text << "group " << cx.R.type_label << " (rank " << cx.R.rank
       << "), perversity " << to_string(cx.p.kind) << "\n\n";
  text << "  stratum  dim  torus  depth  perversity\n";
  for (const auto& s : lat.strata) {
    strata.push_back({{"stratum", s.id.literal(cx.R.rank)},
                      {"dim", s.dim},
                      {"split_torus_dim", s.split_torus_dim},
                      {"depth", s.depth},
                      {"perversity", cx.p.at(s.id.subset)}});
    std::string lit = s.id.literal(cx.R.rank);
    text << "  " << lit << std::string(lit.size() < 9 ? 9 - lit.size() : 1, ' ')
         << s.dim << "    " << s.split_torus_dim << "      " << s.depth
         << "      " << cx.p.at(s.id.subset) << "\n";
  }
  json covers = json::array();
  text << "\ncovers (smaller -> larger):\n";
  for (const auto& [i, j] : lat.covers) {
    const std::string a = lat.strata[i].id.literal(cx.R.rank);
    const std::string b = lat.strata[j].id.literal(cx.R.rank);
    covers.push_back({{"smaller", a}, {"larger", b}});
    text << "  " << a << " -> " << b << "\n";
  }
  json pbar_rows = json::array();
  text << "\nshifted perversities pbar_T(S) for S <= T:\n";
  for (const auto& T : subsets) {
    text << "  T = " << StratumId{T}.literal(cx.R.rank) << ":";
    for (const auto& S : subsets) {
      if (!std::includes(T.begin(), T.end(), S.begin(), S.end())) continue;
      const int v = pbar(cx.p, S, T);
      pbar_rows.push_back({{"larger", StratumId{T}.literal(cx.R.rank)},
                           {"smaller", StratumId{S}.literal(cx.R.rank)},
                           {"value", v}});
      text << "  " << StratumId{S}.literal(cx.R.rank) << ": " << v;
    }
    text << "\n";
  }
  const json doc = {{"group", cx.R.type_label},
                    {"rank", cx.R.rank},
                    {"perversity", to_string(cx.p.kind)},
                    {"strata", strata},
                    {"covers", covers},
                    {"pbar", pbar_rows}};
  emit(opt, doc, text.str());
  return 0;
}

int cmd_link(const Options& opt) {
  const Context cx = make_context(opt);
  const Subset S = parse_subset(opt.stratum, cx.R, "--stratum");
  const Subset T = parse_subset(opt.target, cx.R, "--target");
  const Weight lam =
      parse_weights(cx.R, {{opt.weight, T, "--weight"}}).front();

  const bool strictly_below =
      S != T && std::includes(T.begin(), T.end(), S.begin(), S.end());
  GradedModuleList link;
  link.levi = S;
  if (strictly_below) link = link_cohomology(cx.R, cx.p, S, T, lam);
  const auto star = local_star(cx.R, cx.p, S, T, lam);
  const auto shriek = local_shriek(cx.R, cx.p, S, T, lam);

  const std::string sl = StratumId{S}.literal(cx.R.rank);
  const std::string tl = StratumId{T}.literal(cx.R.rank);
  std::ostringstream text;
  text << "object P(" << tl << ", " << to_string(lam) << "), perversity "
       << to_string(cx.p.kind) << ", evaluated at stratum " << sl << "\n\n";
  text << table_text(link, "link cohomology lk_" + sl + ":");
  text << "\n" << table_text(star, "stalk i^* (degrees < p(" + sl + ") = " +
                                       std::to_string(cx.p.at(S)) + "):");
  text << "\n" << table_text(shriek, "costalk i^!:");
  const json doc = {{"group", cx.R.type_label},
                    {"perversity", to_string(cx.p.kind)},
                    {"stratum", sl},
                    {"target", tl},
                    {"weight", to_string(lam)},
                    {"link", table_json(link)},
                    {"star", table_json(star)},
                    {"shriek", table_json(shriek)}};
  emit(opt, doc, text.str());
  return 0;
}

json ext_result_json(const RootSystem& R, const ExtResult& r) {
  json obs = json::array();
  for (const auto& o : r.obstructions)
    obs.push_back({{"stratum", StratumId{o.stratum}.literal(R.rank)},
                   {"hom_dim", o.hom_dim}});
  return {{"source_stratum", StratumId{r.source.stratum}.literal(R.rank)},
          {"source_weight", to_string(r.source.weight)},
          {"target_stratum", StratumId{r.target.stratum}.literal(R.rank)},
          {"target_weight", to_string(r.target.weight)},
          {"relation", to_string(r.relation)},
          {"candidate_dim", r.candidate_dim},
          {"obstructions", obs},
          {"certified", r.certified},
          {"value_lo", r.value_lo},
          {"value_hi", r.value_hi}};
}

std::string ext_value_text(const ExtResult& r) {
  if (r.certified) return std::to_string(r.value_lo);
  return "[0, " + std::to_string(r.value_hi) + "]";
}

std::string ext_result_text(const RootSystem& R, const ExtResult& r) {
  std::ostringstream os;
  os << "Ext^1( P(" << StratumId{r.source.stratum}.literal(R.rank) << ", "
     << to_string(r.source.weight) << "), P("
     << StratumId{r.target.stratum}.literal(R.rank) << ", "
     << to_string(r.target.weight) << ") )\n";
  os << "  relation:     " << to_string(r.relation) << "\n";
  os << "  candidate:    " << r.candidate_dim << "\n";
  os << "  obstructions:";
  if (r.obstructions.empty()) os << " (none)";
  for (const auto& o : r.obstructions)
    os << " " << StratumId{o.stratum}.literal(R.rank) << ": " << o.hom_dim;
  os << "\n";
  os << "  certified:    " << (r.certified ? "yes" : "no") << "\n";
  os << "  dimension:    " << ext_value_text(r) << "\n";
  return os.str();
}

int cmd_ext(const Options& opt) {
  const Context cx = make_context(opt);
  const Subset T = parse_subset(opt.stratum, cx.R, "--stratum");
  const Subset Tp = parse_subset(opt.target, cx.R, "--target");
  const auto ws = parse_weights(cx.R, {{opt.weight, T, "--weight"},
                                       {opt.target_weight, Tp,
                                        "--target-weight"}});
  const ExtResult r = ext1(cx.R, cx.p, T, ws[0], Tp, ws[1]);
  emit(opt, ext_result_json(cx.R, r), ext_result_text(cx.R, r));
  return 0;
}

// Evaluate the symbolic family at the all-ones parameter point and rerun the
// computation numerically; any disagreement is an internal inconsistency.
int spot_check_family(const Context& cx, const Subset& T,
                      const ExtFamily& fam) {
  const Weight& sw = fam.result.source.weight;
  const Weight& tw = fam.result.target.weight;
  if (sw.is_numeric()) return 0;
  const std::vector<Rat> ones(sw.symbols.size(), Rat(1));
  const Weight lam = evaluate(sw, ones);
  const Weight lamp = evaluate(tw, ones);
  if (!is_dominant(cx.R, T, lam) ||
      !is_dominant(cx.R, fam.target, lamp))
    return 0;  // the all-ones point misses this family's dominance cone
  const ExtResult r = ext1(cx.R, cx.p, T, lam, fam.target, lamp);
  check_internal(r.candidate_dim == fam.result.candidate_dim &&
                     r.certified == fam.result.certified,
                 "numeric spot-check disagrees with the symbolic family " +
                     fam.condition);
  return 1;
}

int cmd_ext_table(const Options& opt) {
  const Context cx = make_context(opt);
  std::vector<Subset> sources;
  if (!opt.stratum.empty())
    sources.push_back(parse_subset(opt.stratum, cx.R, "--stratum"));
  else
    sources = all_subsets(cx.R.rank);

  json rows = json::array();
  std::ostringstream text;
  int families = 0, checked = 0;
  for (const auto& T : sources) {
    const Weight lam =
        opt.weight.empty()
            ? default_symbolic_weight(cx.R, T)
            : parse_weights(cx.R, {{opt.weight, T, "--weight"}}).front();
    text << "source P(" << StratumId{T}.literal(cx.R.rank) << ", "
         << to_string(lam) << "):\n";
    const auto fams = ext_partners(cx.R, cx.p, T, lam);
    if (fams.empty()) text << "  (no nonzero families)\n";
    for (const auto& fam : fams) {
      ++families;
      checked += spot_check_family(cx, T, fam);
      rows.push_back({{"source", StratumId{T}.literal(cx.R.rank)},
                      {"target", StratumId{fam.target}.literal(cx.R.rank)},
                      {"condition", fam.condition},
                      {"result", ext_result_json(cx.R, fam.result)}});
      text << "  -> " << StratumId{fam.target}.literal(cx.R.rank)
           << "  dim " << ext_value_text(fam.result) << "  "
           << (fam.result.certified ? "certified" : "uncertified") << "  ["
           << fam.condition << "]\n";
    }
    text << "\n";
  }
  text << families << " nonzero famil" << (families == 1 ? "y" : "ies")
       << "; numeric spot-check at the all-ones weight: " << checked
       << " confirmed\n";
  const json doc = {{"group", cx.R.type_label},
                    {"perversity", to_string(cx.p.kind)},
                    {"families", rows},
                    {"spot_checked", checked}};
  emit(opt, doc, text.str());
  return 0;
}

int cmd_detect_middle(const Options& opt) {
  const Context cx = make_context(opt);
  const Subset T = parse_subset(opt.target, cx.R, "--target");
  const Weight lam =
      opt.weight.empty()
          ? default_symbolic_weight(cx.R, T)
          : parse_weights(cx.R, {{opt.weight, T, "--weight"}}).front();
  const auto hits = middle_self_extension_detector(cx.R, cx.p, T, lam);
  json arr = json::array();
  std::ostringstream text;
  text << "middle self-extension obstruction sites below "
       << StratumId{T}.literal(cx.R.rank) << " at " << to_string(lam) << ":";
  for (const auto& S : hits) {
    arr.push_back(StratumId{S}.literal(cx.R.rank));
    text << " " << StratumId{S}.literal(cx.R.rank);
  }
  if (hits.empty()) text << " (none)";
  text << "\n";
  const json doc = {{"group", cx.R.type_label},
                    {"target", StratumId{T}.literal(cx.R.rank)},
                    {"weight", to_string(lam)},
                    {"sites", arr}};
  emit(opt, doc, text.str());
  return 0;
}

int cmd_paper_check(const Options& opt) {
  require(opt.format == "text" || opt.format == "json",
          "--format must be 'text' or 'json'");
  const auto results = reference_checks();
  int failures = 0;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    if (!r.ok) ++failures;
    arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    text << "[" << (r.ok ? "PASS" : "FAIL") << "] " << r.name << " — "
         << r.detail << "\n";
  }
  text << (results.size() - failures) << "/" << results.size()
       << " checks passed\n";
  emit(opt, {{"checks", arr}, {"failures", failures}}, text.str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  // Pre-pass: --config seeds defaults, explicit flags then override them.
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string a = argv[i];
      if (a == "--config" && i + 1 < argc)
        opt.config_path = argv[i + 1];
      else if (a.rfind("--config=", 0) == 0)
        opt.config_path = a.substr(9);
    }
    if (!opt.config_path.empty()) load_config(opt.config_path, opt);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"stratification calculator for reductive Borel-Serre "
               "boundaries: link cohomology, perverse bounds, Ext tables"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--config", opt.config_path,
                 "flat key = value file with JSON scalar values");
  app.add_option("--group", opt.group, "root system label (A1, C2, A3, ...)");
  app.add_option("--perversity", opt.perversity, "minus or plus");
  app.add_option("--format", opt.format, "text or json");
  app.add_option("--dim-overrides", opt.dim_overrides_path,
                 "JSON file: stratum literal -> dimension");
  app.add_option("--stratum", opt.stratum,
                 "subset literal (\"{1}\", \"{}\", \"full\")");
  app.add_option("--target", opt.target, "subset literal of the larger/other "
                                         "stratum");
  app.add_option("--weight", opt.weight,
                 "comma-separated coordinates, integers or symbols");
  app.add_option("--target-weight", opt.target_weight,
                 "weight for the target stratum (ext)");

  auto* c_describe = app.add_subcommand(
      "describe", "stratum lattice, dimensions, perversity tables");
  auto* c_link = app.add_subcommand(
      "link", "link cohomology with stalk and costalk tables");
  auto* c_ext = app.add_subcommand("ext", "one Ext^1 computation");
  auto* c_ext_table =
      app.add_subcommand("ext-table", "all nonzero Ext^1 families");
  auto* c_detect = app.add_subcommand(
      "detect-middle", "odd-codimension middle self-extension sites");
  auto* c_paper = app.add_subcommand(
      "paper-check", "reproduce the published rank-2 computations");
  for (CLI::App* sc :
       {c_describe, c_link, c_ext, c_ext_table, c_detect, c_paper})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_describe->parsed()) return cmd_describe(opt);
    if (c_link->parsed()) return cmd_link(opt);
    if (c_ext->parsed()) return cmd_ext(opt);
    if (c_ext_table->parsed()) return cmd_ext_table(opt);
    if (c_detect->parsed()) return cmd_detect_middle(opt);
    if (c_paper->parsed()) return cmd_paper_check(opt);
  } catch (const invalid_input& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
