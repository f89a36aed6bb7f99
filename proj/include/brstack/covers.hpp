#pragma once

#include "brstack/abelian.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brstack {

/// A = (g', N, d_1, ..., d_{N-1}): a mu_N-cover of a genus-g' curve with d_i
/// branch points of local type i.
class AdmissibleDatum {
 public:
  /// Throws Error unless g' >= 0, N >= 2, degrees.size() == N - 1 and every
  /// d_i >= 0.
  AdmissibleDatum(std::int64_t quotient_genus, std::int64_t order, std::vector<std::int64_t> degrees);

  /// Parses the flat list "g',N,d1,...,d_{N-1}" with strict length checking.
  static AdmissibleDatum parse(std::string_view text);

  std::int64_t quotient_genus() const { return quotient_genus_; }
  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  /// d_i for 1 <= i <= N-1.
  std::int64_t degree(std::int64_t i) const { return degrees_.at(static_cast<std::size_t>(i - 1)); }
  /// d = sum i d_i.
  Integer total_branch_sum() const;

  std::string to_string() const;  ///< "(0,2,[6])"

  friend bool operator==(const AdmissibleDatum&, const AdmissibleDatum&) = default;
  friend auto operator<=>(const AdmissibleDatum&, const AdmissibleDatum&) = default;

 private:
  std::int64_t quotient_genus_;
  std::int64_t order_;
  std::vector<std::int64_t> degrees_;
};

/// Riemann-Hurwitz: 2g - 2 = N(2g' - 2) + sum_i d_i (N - gcd(i, N)). The
/// result may be non-integral or below 2.
mpq_class total_genus(const AdmissibleDatum& a);

enum class AdmissibilityFailure {
  NonIntegralGenus,      ///< total genus is a half-integer
  GenusMismatch,         ///< total genus is an integer different from g
  GenusTooSmall,         ///< total genus is an integer below 2
  StructuralEquation,    ///< sum i d_i != 0 mod N
  QuotientGenusTooLarge  ///< g' > g
};

std::string to_string(AdmissibilityFailure f);

struct AdmissibilityResult {
  bool admissible = false;
  std::vector<AdmissibilityFailure> failures;

  explicit operator bool() const { return admissible; }
};

/// Whether `a` is g-admissible. Throws Error if g < 2.
AdmissibilityResult is_admissible(const AdmissibleDatum& a, std::int64_t g);

/// All g-admissible data of order N in lexicographic (g', d_1, ..., d_{N-1})
/// order, optionally restricted to one quotient genus.
std::vector<AdmissibleDatum> enumerate_admissible(std::int64_t g, std::int64_t order,
                                                  std::optional<std::int64_t> quotient_genus = {});

/// k = gcd(N, {i : d_i != 0}); equals N when the cover is unramified.
std::int64_t connectedness_k(const AdmissibleDatum& a);

/// For a genus-0 quotient the covers are connected iff k = 1. Throws Error
/// for g' > 0.
bool is_connected_genus0(const AdmissibleDatum& a);

enum class Connectedness { Connected, Disconnected, Undetermined };

std::string to_string(Connectedness c);

/// Connected when k = 1 (any g'); for g' = 0 disconnected when k > 1; for
/// g' > 0 and k > 1 it depends on the order of a line bundle in Pic(C) and is
/// reported as undetermined.
Connectedness connectedness(const AdmissibleDatum& a);

}  // namespace brstack
