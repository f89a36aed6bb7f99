#include "brstack/json_io.hpp"

#include "brstack/error.hpp"

#include <cctype>

namespace brstack {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Integer> integers_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<Integer> out;
  for (const Json& x : j) out.push_back(integer_from_json(x));
  return out;
}

Json array_json(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const Integer& x : xs) a.push_back(to_json(x));
  return a;
}

Json matrix_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_rows()) rows.push_back(array_json(row));
  return rows;
}

std::int64_t small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

bool boolean(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

AdmissibilityFailure failure_from_string(const std::string& s) {
  for (auto f : {AdmissibilityFailure::NonIntegralGenus, AdmissibilityFailure::GenusMismatch,
                 AdmissibilityFailure::GenusTooSmall, AdmissibilityFailure::StructuralEquation,
                 AdmissibilityFailure::QuotientGenusTooLarge}) {
    if (to_string(f) == s) return f;
  }
  throw ParseError("unknown admissibility failure '" + s + "'");
}

Connectedness connectedness_from_string(const std::string& s) {
  for (auto c : {Connectedness::Connected, Connectedness::Disconnected, Connectedness::Undetermined}) {
    if (to_string(c) == s) return c;
  }
  throw ParseError("unknown connectedness '" + s + "'");
}

bool is_family_letter(const std::string& s) {
  return s.size() == 1 && std::string_view("ABCDEFGabcdefg").find(s[0]) != std::string_view::npos;
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("'" + j.get<std::string>() + "' is not an integer");
    return x;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const FiniteAbelianGroup& g) { return array_json(g.invariant_factors()); }

FiniteAbelianGroup group_from_json(const Json& j) {
  try {
    return FiniteAbelianGroup(integers_from_json(j));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const GroupElement& x) {
  Json j;
  j["group"] = to_json(x.group());
  j["coords"] = array_json(x.coords());
  return j;
}

GroupElement element_from_json(const Json& j) {
  FiniteAbelianGroup g = group_from_json(field(j, "group"));
  std::vector<Integer> coords = integers_from_json(field(j, "coords"));
  if (coords.size() != g.rank()) throw ParseError("element coordinate count does not match its group");
  return GroupElement(std::move(g), std::move(coords));
}

Json to_json(const SmithDecomposition& s) {
  Json j;
  j["d"] = array_json(s.diagonal);
  j["U"] = matrix_json(s.left);
  j["V"] = matrix_json(s.right);
  return j;
}

Json to_json(const AdmissibleDatum& a) {
  Json j;
  j["gq"] = a.quotient_genus();
  j["N"] = a.order();
  j["d"] = a.degrees();
  return j;
}

AdmissibleDatum datum_from_json(const Json& j) {
  const std::int64_t gq = small_int(field(j, "gq"), "gq");
  const std::int64_t n = small_int(field(j, "N"), "N");
  const Json& d = field(j, "d");
  if (!d.is_array()) throw ParseError("d must be an array");
  std::vector<std::int64_t> degrees;
  for (const Json& x : d) degrees.push_back(small_int(x, "d_i"));
  try {
    return AdmissibleDatum(gq, n, std::move(degrees));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const BrauerReport& r) {
  Json j;
  j["h2"] = to_json(r.h2_group);
  j["class_nontrivial"] = r.class_nontrivial();
  j["d_over_N"] = to_json(r.d_over_N);
  j["all_di_even"] = r.all_di_even;
  return j;
}

BrauerReport brauer_report_from_json(const Json& j) {
  FiniteAbelianGroup h2 = group_from_json(field(j, "h2"));
  const bool nontrivial = boolean(field(j, "class_nontrivial"), "class_nontrivial");
  if (nontrivial && h2.is_trivial()) throw ParseError("nontrivial class in a trivial H^2");
  if (h2.rank() > 1 || (h2.rank() == 1 && h2.invariant_factors()[0] != 2)) {
    throw ParseError("H^2 must be trivial or Z/2");
  }
  GroupElement cls = h2.is_trivial() ? GroupElement::identity(h2) : GroupElement(h2, {Integer(nontrivial ? 1 : 0)});
  return BrauerReport{std::move(h2), std::move(cls), integer_from_json(field(j, "d_over_N")),
                      boolean(field(j, "all_di_even"), "all_di_even")};
}

Json to_json(const SectorReport& r) {
  Json j = to_json(r.datum);
  if (r.total_genus.get_den() == 1) {
    j["g"] = to_json(r.total_genus.get_num());
  } else {
    j["g"] = r.total_genus.get_str();
  }
  j["admissible"] = r.admissible;
  Json failures = Json::array();
  for (auto f : r.failures) failures.push_back(to_string(f));
  j["failures"] = failures;
  j["k"] = r.gcd_k;
  j["connected"] = to_string(r.connected);
  j["brauer"] = r.brauer ? to_json(*r.brauer) : Json(nullptr);
  return j;
}

SectorReport sector_report_from_json(const Json& j) {
  SectorReport r{datum_from_json(j), mpq_class(0), false, {}, 0, Connectedness::Undetermined, std::nullopt};
  const Json& g = field(j, "g");
  if (g.is_string()) {
    if (r.total_genus.set_str(g.get<std::string>(), 10) != 0) throw ParseError("bad genus " + g.dump());
    r.total_genus.canonicalize();
  } else {
    r.total_genus = mpq_class(integer_from_json(g));
  }
  r.admissible = boolean(field(j, "admissible"), "admissible");
  const Json& failures = field(j, "failures");
  if (!failures.is_array()) throw ParseError("failures must be an array");
  for (const Json& f : failures) {
    if (!f.is_string()) throw ParseError("failure reasons must be strings");
    r.failures.push_back(failure_from_string(f.get<std::string>()));
  }
  r.gcd_k = small_int(field(j, "k"), "k");
  const Json& c = field(j, "connected");
  if (!c.is_string()) throw ParseError("connected must be a string");
  r.connected = connectedness_from_string(c.get<std::string>());
  const Json& b = field(j, "brauer");
  if (!b.is_null()) r.brauer = brauer_report_from_json(b);
  return r;
}

Json to_json(const SemisimpleGroupSpec& spec) {
  Json j;
  Json factors = Json::array();
  for (const SimpleType& t : spec.factors()) factors.push_back(t.name());
  j["factors"] = factors;
  Json gens = Json::array();
  for (const auto& g : spec.central_generators()) gens.push_back(array_json(g));
  j["central_generators"] = gens;
  return j;
}

SemisimpleGroupSpec semisimple_spec_from_json(const Json& j) {
  const Json& fs = field(j, "factors");
  if (!fs.is_array() || fs.empty()) throw ParseError("factors must be a nonempty array");
  std::vector<SimpleType> factors;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].is_string()) throw ParseError("factor entries must be strings");
    std::string name = fs[i].get<std::string>();
    if (is_family_letter(name)) {
      // Tokenized form: family letter followed by its rank.
      if (i + 1 >= fs.size()) throw ParseError("family '" + name + "' is missing its rank");
      const Json& rank = fs[++i];
      name += rank.is_string() ? rank.get<std::string>() : rank.dump();
    }
    try {
      factors.push_back(SimpleType::parse(name));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  std::vector<std::vector<Integer>> gens;
  if (j.contains("central_generators")) {
    const Json& gs = j.at("central_generators");
    if (!gs.is_array()) throw ParseError("central_generators must be an array");
    for (const Json& g : gs) gens.push_back(integers_from_json(g));
  }
  return SemisimpleGroupSpec(std::move(factors), std::move(gens));
}

}  // namespace brstack
