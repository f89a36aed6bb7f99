#pragma once

#include "brstack/brauer.hpp"
#include "brstack/covers.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace brstack {

/// One component M'_A of the N-th twisted sector I_N(M_g).
struct SectorReport {
  AdmissibleDatum datum;
  mpq_class total_genus;
  bool admissible = false;
  std::vector<AdmissibilityFailure> failures;
  std::int64_t gcd_k = 0;
  Connectedness connected = Connectedness::Undetermined;
  /// Present exactly when g' = 0 and the datum is admissible.
  std::optional<BrauerReport> brauer;
};

/// Report for one datum, checked against its own computed genus. A
/// non-integral genus or a genus below 2 makes the datum inadmissible.
SectorReport classify(const AdmissibleDatum& a);

/// I_N(M_g) as the disjoint union of M'_A over the g-admissible A.
std::vector<SectorReport> decompose_inertia(std::int64_t g, std::int64_t order);

}  // namespace brstack
