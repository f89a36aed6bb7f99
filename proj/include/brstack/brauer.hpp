#pragma once

#include "brstack/abelian.hpp"
#include "brstack/covers.hpp"

#include <span>

namespace brstack {

/// Brauer data of a genus-0-quotient sector.
struct BrauerReport {
  FiniteAbelianGroup h2_group;  ///< H^2(N_A-bar, G_m): trivial or Z/2
  GroupElement ma_class;        ///< class of the G_m-pushout of M_A-bar
  Integer d_over_N;
  bool all_di_even = false;

  bool class_nontrivial() const { return !ma_class.is_identity(); }
};

/// H^2(N_A-bar, G_m) for a genus-0 quotient: Z/2 when every d_i is even,
/// trivial otherwise. Throws Error when g' != 0 or the datum is not
/// admissible for its own genus.
FiniteAbelianGroup h2_of_NA(const AdmissibleDatum& a);

/// [M_A-bar^G_m] = [gamma^* G_{d/N}]: nontrivial exactly when all d_i are even
/// and d/N is odd. Restriction to the open substack M_A is injective on
/// Brauer groups, so the same element is the class of M_A.
GroupElement class_of_MA(const AdmissibleDatum& a);

BrauerReport brauer_report(const AdmissibleDatum& a);

/// Class of the gerbe G_d of degree-d line bundles on genus-0 curves in
/// Br(BPGL_2) = Z/2, namely d mod 2.
GroupElement sym_d_class(const Integer& degree);

/// Brauer class of [PV/G] -> BG when B acts on V through chi: chi^{-1}.
GroupElement projective_bundle_class(const GroupElement& chi);

/// psi = sum a_i chi_i^{-1}, the class of the gerbe of line bundles of
/// multidegree (a_1, ..., a_r) on the fiber product of the [PV_i/G].
GroupElement pushforward_class(std::span<const GroupElement> chis, std::span<const Integer> exps);

}  // namespace brstack
