#include "brstack/inertia.hpp"

namespace brstack {

SectorReport classify(const AdmissibleDatum& a) {
  SectorReport r{a, total_genus(a), false, {}, connectedness_k(a), connectedness(a), std::nullopt};
  const mpq_class& g = r.total_genus;
  if (g.get_den() == 1 && g >= 2) {
    const AdmissibilityResult check = is_admissible(a, g.get_num().get_si());
    r.admissible = check.admissible;
    r.failures = check.failures;
  } else {
    r.failures.push_back(g.get_den() != 1 ? AdmissibilityFailure::NonIntegralGenus
                                          : AdmissibilityFailure::GenusTooSmall);
    if (!mpz_divisible_ui_p(a.total_branch_sum().get_mpz_t(), static_cast<unsigned long>(a.order()))) {
      r.failures.push_back(AdmissibilityFailure::StructuralEquation);
    }
  }
  if (r.admissible && a.quotient_genus() == 0) r.brauer = brauer_report(a);
  return r;
}

std::vector<SectorReport> decompose_inertia(std::int64_t g, std::int64_t order) {
  std::vector<SectorReport> out;
  for (const AdmissibleDatum& a : enumerate_admissible(g, order)) out.push_back(classify(a));
  return out;
}

}  // namespace brstack
