#include "brstack/cli.hpp"

#include "brstack/abelian.hpp"
#include "brstack/brauer.hpp"
#include "brstack/covers.hpp"
#include "brstack/error.hpp"
#include "brstack/inertia.hpp"
#include "brstack/json_io.hpp"
#include "brstack/rootdata.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <climits>
#include <optional>
#include <ostream>
#include <sstream>

namespace brstack::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string& text) {
  const std::string t = trim(text);
  Integer x;
  if (t.empty() || x.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) {
    throw ParseError("'" + text + "' is not an integer");
  }
  return x;
}

IntegerMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : split_matrix_literal(text)) {
    std::vector<Integer> r;
    for (const auto& e : row) r.push_back(parse_integer(e));
    rows.push_back(std::move(r));
  }
  return IntegerMatrix::from_rows(rows);
}

std::vector<SimpleType> parse_types(const std::string& text) {
  std::vector<SimpleType> types;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), 'x', ',');
  std::replace(normalized.begin(), normalized.end(), '*', ',');
  for (const auto& part : split(normalized, ',')) {
    const std::string name = trim(part);
    if (name.empty()) throw ParseError("empty simple type in '" + text + "'");
    try {
      types.push_back(SimpleType::parse(name));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  if (types.empty()) throw ParseError("no simple types given");
  return types;
}

SemisimpleGroupSpec parse_group(const std::string& types_text, const std::string& center) {
  std::vector<SimpleType> types = parse_types(types_text);
  if (center == "full") return SemisimpleGroupSpec::adjoint(std::move(types));
  if (center == "trivial") return SemisimpleGroupSpec::simply_connected(std::move(types));
  if (center.rfind("gens=", 0) == 0) {
    std::vector<std::vector<Integer>> gens;
    const std::string body = center.substr(5);
    if (!trim(body).empty()) {
      for (const auto& row : split_matrix_literal(body)) {
        std::vector<Integer> g;
        for (const auto& e : row) g.push_back(parse_integer(e));
        gens.push_back(std::move(g));
      }
    }
    try {
      return SemisimpleGroupSpec(std::move(types), std::move(gens));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("--center must be full, trivial or gens=<coords>, got '" + center + "'");
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string genus_string(const mpq_class& g) { return g.get_str(); }

std::string sector_row(const SectorReport& r) {
  std::ostringstream os;
  os << r.datum.to_string() << "  g=" << genus_string(r.total_genus) << "  k=" << r.gcd_k << "  "
     << to_string(r.connected);
  if (r.brauer) {
    os << "  H2=" << r.brauer->h2_group.to_string()
       << "  class=" << (r.brauer->class_nontrivial() ? "nontrivial" : "trivial")
       << "  d/N=" << r.brauer->d_over_N.get_str();
  }
  return os.str();
}

// --- subcommands ------------------------------------------------------------

int cmd_snf(const std::string& literal, bool json, std::ostream& out) {
  const IntegerMatrix a = parse_matrix(literal);
  const SmithDecomposition snf = smith_normal_form(a);
  if (json) {
    print_json(out, to_json(snf));
    return kExitOk;
  }
  out << "d = [";
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) out << (i ? ", " : "") << snf.diagonal[i];
  out << "]\n";
  out << "U = " << snf.left << '\n';
  out << "V = " << snf.right << '\n';
  return kExitOk;
}

int cmd_br_bg(const std::string& types, const std::string& center, const std::string& spec_json, bool json,
              std::ostream& out) {
  std::optional<SemisimpleGroupSpec> spec;
  if (!spec_json.empty()) {
    Json j;
    try {
      j = Json::parse(spec_json);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad --spec JSON: ") + e.what());
    }
    try {
      spec = semisimple_spec_from_json(j);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  } else {
    if (types.empty()) throw ParseError("br-bg needs --type or --spec");
    spec = parse_group(types, center);
  }
  const FiniteAbelianGroup br = brauer_group_of_BG(*spec);
  if (json) {
    Json j;
    j["group"] = to_json(*spec);
    j["center"] = to_json(spec->layout().group());
    Json layout = Json::array();
    for (const auto& m : spec->layout().moduli()) layout.push_back(to_json(m));
    j["center_coordinates"] = layout;
    j["fundamental_group"] = to_json(spec->central_subgroup());
    j["brauer_group"] = to_json(br);
    print_json(out, j);
  } else {
    out << br.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(std::int64_t g, std::int64_t n, std::optional<std::int64_t> gq, bool json, std::ostream& out) {
  if (g < 2) throw ParseError("--g must be at least 2");
  if (n < 2) throw ParseError("--N must be at least 2");
  const auto data = enumerate_admissible(g, n, gq);
  if (json) {
    Json a = Json::array();
    for (const auto& d : data) a.push_back(to_json(d));
    print_json(out, a);
  } else {
    for (const auto& d : data) out << d.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_inertia(std::int64_t g, std::int64_t n, bool genus0_only, bool json, std::ostream& out) {
  if (g < 2) throw ParseError("--g must be at least 2");
  if (n < 2) throw ParseError("--N must be at least 2");
  std::vector<SectorReport> reports = decompose_inertia(g, n);
  if (genus0_only) {
    std::erase_if(reports, [](const SectorReport& r) { return r.datum.quotient_genus() != 0; });
  }
  if (json) {
    Json a = Json::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    print_json(out, a);
  } else {
    for (const auto& r : reports) out << sector_row(r) << '\n';
  }
  return kExitOk;
}

int cmd_classify(const std::string& datum_text, bool json, std::ostream& out) {
  const AdmissibleDatum a = AdmissibleDatum::parse(datum_text);
  const SectorReport r = classify(a);
  if (json) {
    print_json(out, to_json(r));
  } else {
    out << "datum:       " << a.to_string() << '\n';
    out << "genus:       " << genus_string(r.total_genus) << '\n';
    out << "admissible:  " << (r.admissible ? "yes" : "no") << '\n';
    for (auto f : r.failures) out << "  failure:   " << to_string(f) << '\n';
    out << "k:           " << r.gcd_k << '\n';
    out << "connected:   " << to_string(r.connected) << '\n';
    if (r.brauer) {
      out << "H2:          " << r.brauer->h2_group.to_string() << '\n';
      out << "class:       " << (r.brauer->class_nontrivial() ? "nontrivial" : "trivial") << '\n';
      out << "d/N:         " << r.brauer->d_over_N.get_str() << '\n';
      out << "all d_i even: " << (r.brauer->all_di_even ? "yes" : "no") << '\n';
    }
  }
  return r.admissible ? kExitOk : kExitNegative;
}

}  // namespace

std::vector<std::vector<std::string>> split_matrix_literal(const std::string& text) {
  if (trim(text).empty()) throw ParseError("empty matrix literal");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<std::string> entries;
    for (const auto& e : split(row, ',')) {
      if (trim(e).empty()) throw ParseError("empty entry in matrix literal '" + text + "'");
      entries.push_back(trim(e));
    }
    if (entries.empty()) throw ParseError("empty row in matrix literal '" + text + "'");
    if (!rows.empty() && entries.size() != rows.front().size()) {
      throw ParseError("rows of unequal length in matrix literal '" + text + "'");
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer groups of classifying stacks and twisted sectors of M_g", "brstack"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit a single JSON document");

  std::string matrix;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", matrix, "Rows separated by ';', entries by ','")->required();

  std::string types;
  std::string center = "full";
  std::string spec_json;
  auto* br = app.add_subcommand("br-bg", "Brauer group of BG for G = G~/B");
  br->add_option("--type", types, "Simple factors of G~, e.g. A1 or A1,D4");
  br->add_option("--center", center, "full | trivial | gens=<c,..;c,..>")->capture_default_str();
  br->add_option("--spec", spec_json, "Group as JSON {\"factors\": [...], \"central_generators\": [...]}");

  std::int64_t g = 0;
  std::int64_t n = 0;
  std::int64_t gq = -1;
  auto* en = app.add_subcommand("enumerate", "Admissible data (g', N, d_1..d_{N-1}) of genus g");
  en->add_option("--g", g, "Genus of the covering curve")->required();
  en->add_option("--N", n, "Order of the automorphism")->required();
  en->add_option("--gq", gq, "Restrict to this quotient genus");

  bool genus0_only = false;
  auto* in = app.add_subcommand("inertia", "Components of the N-th twisted sector of M_g");
  in->add_option("--g", g, "Genus")->required();
  in->add_option("--N", n, "Order")->required();
  in->add_flag("--genus0-only", genus0_only, "Only sectors with genus-0 quotient");

  std::string datum;
  auto* cl = app.add_subcommand("classify", "Classify one datum");
  cl->add_option("--datum", datum, "g',N,d_1,...,d_{N-1}")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (snf->parsed()) return cmd_snf(matrix, json, out);
    if (br->parsed()) return cmd_br_bg(types, center, spec_json, json, out);
    if (en->parsed()) return cmd_enumerate(g, n, gq >= 0 ? std::optional(gq) : std::nullopt, json, out);
    if (in->parsed()) return cmd_inertia(g, n, genus0_only, json, out);
    if (cl->parsed()) return cmd_classify(datum, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace brstack::cli
