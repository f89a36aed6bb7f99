#include "brstack/covers.hpp"

#include "brstack/error.hpp"

#include <charconv>
#include <numeric>

namespace brstack {

AdmissibleDatum::AdmissibleDatum(std::int64_t quotient_genus, std::int64_t order,
                                 std::vector<std::int64_t> degrees)
    : quotient_genus_(quotient_genus), order_(order), degrees_(std::move(degrees)) {
  if (quotient_genus_ < 0) throw Error("quotient genus must be nonnegative");
  if (order_ < 2) throw Error("order N must be at least 2, got " + std::to_string(order_));
  if (degrees_.size() != static_cast<std::size_t>(order_ - 1)) {
    throw Error("N = " + std::to_string(order_) + " needs " + std::to_string(order_ - 1) +
                " branch degrees, got " + std::to_string(degrees_.size()));
  }
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 0) throw Error("branch degree d_" + std::to_string(i + 1) + " is negative");
  }
}

AdmissibleDatum AdmissibleDatum::parse(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError("datum field '" + std::string(field) + "' is not an integer");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.size() < 2) throw ParseError("datum needs at least g' and N");
  const std::int64_t n = values[1];
  if (n < 2) throw ParseError("datum order N must be at least 2");
  if (values.size() != static_cast<std::size_t>(n + 1)) {
    throw ParseError("datum with N = " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                     " degrees, got " + std::to_string(values.size() - 2));
  }
  try {
    return AdmissibleDatum(values[0], n, std::vector<std::int64_t>(values.begin() + 2, values.end()));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Integer AdmissibleDatum::total_branch_sum() const {
  Integer d = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    d += Integer(static_cast<long>(i + 1)) * Integer(static_cast<long>(degrees_[i]));
  return d;
}

std::string AdmissibleDatum::to_string() const {
  std::string s = "(" + std::to_string(quotient_genus_) + "," + std::to_string(order_) + ",[";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees_[i]);
  }
  return s + "])";
}

mpq_class total_genus(const AdmissibleDatum& a) {
  const std::int64_t n = a.order();
  Integer twice = Integer(static_cast<long>(n)) * Integer(static_cast<long>(2 * a.quotient_genus() - 2));
  for (std::int64_t i = 1; i < n; ++i)
    twice += Integer(static_cast<long>(a.degree(i))) * Integer(static_cast<long>(n - std::gcd(i, n)));
  mpq_class g(twice + 2, 2);
  g.canonicalize();
  return g;
}

std::string to_string(AdmissibilityFailure f) {
  switch (f) {
    case AdmissibilityFailure::NonIntegralGenus: return "non-integral genus";
    case AdmissibilityFailure::GenusMismatch: return "genus mismatch";
    case AdmissibilityFailure::GenusTooSmall: return "genus below 2";
    case AdmissibilityFailure::StructuralEquation: return "structural equation";
    case AdmissibilityFailure::QuotientGenusTooLarge: return "quotient genus exceeds genus";
  }
  return "unknown";
}

AdmissibilityResult is_admissible(const AdmissibleDatum& a, std::int64_t g) {
  if (g < 2) throw Error("genus must be at least 2, got " + std::to_string(g));
  AdmissibilityResult r;
  const mpq_class genus = total_genus(a);
  if (genus.get_den() != 1) {
    r.failures.push_back(AdmissibilityFailure::NonIntegralGenus);
  } else if (genus.get_num() != Integer(static_cast<long>(g))) {
    r.failures.push_back(AdmissibilityFailure::GenusMismatch);
  }
  if (!mpz_divisible_ui_p(a.total_branch_sum().get_mpz_t(), static_cast<unsigned long>(a.order()))) {
    r.failures.push_back(AdmissibilityFailure::StructuralEquation);
  }
  if (a.quotient_genus() > g) r.failures.push_back(AdmissibilityFailure::QuotientGenusTooLarge);
  r.admissible = r.failures.empty();
  return r;
}

namespace {

// Depth-first over d_1, ..., d_{N-1} in increasing order, spending the
// ramification budget 2g - 2 - N(2g' - 2) exactly.
void fill_degrees(std::int64_t order, std::int64_t index, std::int64_t budget, std::int64_t weighted_sum,
                  std::vector<std::int64_t>& degrees, std::int64_t quotient_genus,
                  std::vector<AdmissibleDatum>& out) {
  if (index == order) {
    if (budget == 0 && weighted_sum % order == 0) out.emplace_back(quotient_genus, order, degrees);
    return;
  }
  const std::int64_t cost = order - std::gcd(index, order);
  for (std::int64_t d = 0; d * cost <= budget; ++d) {
    degrees[static_cast<std::size_t>(index - 1)] = d;
    fill_degrees(order, index + 1, budget - d * cost, (weighted_sum + d * index) % order, degrees,
                 quotient_genus, out);
  }
  degrees[static_cast<std::size_t>(index - 1)] = 0;
}

}  // namespace

std::vector<AdmissibleDatum> enumerate_admissible(std::int64_t g, std::int64_t order,
                                                  std::optional<std::int64_t> quotient_genus) {
  if (g < 2) throw Error("genus must be at least 2, got " + std::to_string(g));
  if (order < 2) throw Error("order N must be at least 2, got " + std::to_string(order));

  const std::int64_t max_gq = std::min(g, (2 * g - 2) / (2 * order) + 1);
  std::vector<AdmissibleDatum> out;
  std::vector<std::int64_t> degrees(static_cast<std::size_t>(order - 1), 0);
  for (std::int64_t gq = 0; gq <= max_gq; ++gq) {
    if (quotient_genus && *quotient_genus != gq) continue;
    const std::int64_t budget = 2 * g - 2 - order * (2 * gq - 2);
    if (budget < 0) continue;
    fill_degrees(order, 1, budget, 0, degrees, gq, out);
  }
  return out;
}

std::int64_t connectedness_k(const AdmissibleDatum& a) {
  std::int64_t k = a.order();
  for (std::int64_t i = 1; i < a.order(); ++i)
    if (a.degree(i) != 0) k = std::gcd(k, i);
  return k;
}

bool is_connected_genus0(const AdmissibleDatum& a) {
  if (a.quotient_genus() != 0) {
    throw Error("connectedness by gcd alone is only decided for genus-0 quotients; got g' = " +
                std::to_string(a.quotient_genus()));
  }
  return connectedness_k(a) == 1;
}

std::string to_string(Connectedness c) {
  switch (c) {
    case Connectedness::Connected: return "connected";
    case Connectedness::Disconnected: return "disconnected";
    case Connectedness::Undetermined: return "undetermined";
  }
  return "unknown";
}

Connectedness connectedness(const AdmissibleDatum& a) {
  const std::int64_t k = connectedness_k(a);
  if (k == 1) return Connectedness::Connected;
  if (a.quotient_genus() == 0) return Connectedness::Disconnected;
  return Connectedness::Undetermined;
}

}  // namespace brstack
