#include "brstack/brauer.hpp"

#include "brstack/error.hpp"

#include <algorithm>

namespace brstack {
namespace {

const FiniteAbelianGroup& z2() {
  static const FiniteAbelianGroup g({Integer(2)});
  return g;
}

void require_genus0_admissible(const AdmissibleDatum& a) {
  if (a.quotient_genus() != 0) {
    throw Error("Brauer classes are only classified for genus-0 quotients; got " + a.to_string());
  }
  const mpq_class g = total_genus(a);
  if (g.get_den() != 1 || g < 2) {
    throw Error(a.to_string() + " has genus " + g.get_str() + ", not an integer greater than 1");
  }
  const AdmissibilityResult r = is_admissible(a, g.get_num().get_si());
  if (!r) throw Error(a.to_string() + " is not admissible: " + to_string(r.failures.front()));
}

bool all_degrees_even(const AdmissibleDatum& a) {
  return std::all_of(a.degrees().begin(), a.degrees().end(), [](std::int64_t d) { return d % 2 == 0; });
}

}  // namespace

FiniteAbelianGroup h2_of_NA(const AdmissibleDatum& a) {
  require_genus0_admissible(a);
  // Each d_i kills [d_i] in H^2(BPGL_2, G_m) = Z/2 along the tower of
  // Brauer-Severi stacks [P Sym^{d_i} V / PGL_2].
  return all_degrees_even(a) ? z2() : FiniteAbelianGroup();
}

GroupElement class_of_MA(const AdmissibleDatum& a) {
  const FiniteAbelianGroup h2 = h2_of_NA(a);
  if (h2.is_trivial()) return GroupElement::identity(h2);
  // gamma^* [G_{d/N}] = [d/N] in Z/2, and gamma^* is the identity on Z/2 here.
  const Integer d_over_n = a.total_branch_sum() / Integer(static_cast<long>(a.order()));
  return GroupElement(h2, {d_over_n});
}

BrauerReport brauer_report(const AdmissibleDatum& a) {
  GroupElement cls = class_of_MA(a);
  FiniteAbelianGroup h2 = cls.group();
  return BrauerReport{std::move(h2), std::move(cls),
                      a.total_branch_sum() / Integer(static_cast<long>(a.order())), all_degrees_even(a)};
}

GroupElement sym_d_class(const Integer& degree) {
  if (degree < 0) throw Error("degree must be nonnegative");
  return GroupElement(z2(), {degree});
}

GroupElement projective_bundle_class(const GroupElement& chi) { return negate(chi); }

GroupElement pushforward_class(std::span<const GroupElement> chis, std::span<const Integer> exps) {
  if (chis.size() != exps.size()) {
    throw Error("pushforward_class: " + std::to_string(chis.size()) + " characters but " +
                std::to_string(exps.size()) + " exponents");
  }
  if (chis.empty()) throw Error("pushforward_class needs at least one character");
  GroupElement psi = GroupElement::identity(chis.front().group());
  for (std::size_t i = 0; i < chis.size(); ++i) psi = psi + scale(exps[i], negate(chis[i]));
  return psi;
}

}  // namespace brstack
