#pragma once

#include "brstack/abelian.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace brstack {

enum class Family { A, B, C, D, E, F, G };

/// Simple root system type. Low-rank coincidences (B1, C2, D2, D3, ...) are
/// rejected rather than aliased.
class SimpleType {
 public:
  /// Throws Error if the rank is outside the family's allowed range.
  SimpleType(Family family, int rank);

  /// Parses "A5", "d4", "E8". Throws ParseError.
  static SimpleType parse(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

char family_letter(Family f);

/// Cartan matrix with entry (i, j) = 2 (a_i, a_j) / (a_j, a_j), simple roots
/// in Bourbaki order. Under this convention G2 is [[2, -1], [-3, 2]] with a_1
/// short, and B_n has a_n short.
IntegerMatrix cartan_matrix(const SimpleType& t);

/// Coordinates on the center of one simply connected factor: the cokernel
/// Z^r / C Z^r of its Cartan matrix C, with U C V = D in Smith form. A
/// weight-lattice vector x maps to the residues (U x)_i mod d_i, keeping only
/// the positions with d_i > 1.
struct FactorCenter {
  SimpleType type;
  std::vector<Integer> moduli;
  IntegerMatrix coordinate_map;  ///< rows of U for the kept positions
};

/// Center Z of a product of simply connected simple groups, presented as the
/// concatenation of the per-factor coordinates in factor order. The moduli
/// need not form an invariant-factor chain.
struct CenterLayout {
  std::vector<FactorCenter> factors;

  std::vector<Integer> moduli() const;
  FiniteAbelianGroup group() const;
};

CenterLayout center_layout(const std::vector<SimpleType>& factors);

/// Z(G~) for G~ the product of the simply connected groups of the given
/// types, in invariant-factor form.
FiniteAbelianGroup center_of_simply_connected(const std::vector<SimpleType>& factors);

/// G = G~ / B with G~ a product of simply connected simple groups and B a
/// central subgroup given by generators in CenterLayout coordinates.
class SemisimpleGroupSpec {
 public:
  /// Throws Error if factors is empty or a generator is not an element of
  /// the center (wrong length or a coordinate outside [0, modulus)).
  SemisimpleGroupSpec(std::vector<SimpleType> factors,
                      std::vector<std::vector<Integer>> central_generators);
  /// Same, reusing an already computed layout of the center.
  SemisimpleGroupSpec(CenterLayout layout, std::vector<std::vector<Integer>> central_generators);

  static SemisimpleGroupSpec simply_connected(std::vector<SimpleType> factors);
  static SemisimpleGroupSpec adjoint(std::vector<SimpleType> factors);

  const std::vector<SimpleType>& factors() const { return factors_; }
  const CenterLayout& layout() const { return layout_; }
  const std::vector<std::vector<Integer>>& central_generators() const { return generators_; }
  /// B, the kernel of G~ -> G, which is the fundamental group of G.
  const FiniteAbelianGroup& central_subgroup() const { return subgroup_; }

  std::string name() const;

 private:
  std::vector<SimpleType> factors_;
  CenterLayout layout_;
  std::vector<std::vector<Integer>> generators_;
  FiniteAbelianGroup subgroup_;
};

/// Br(BG) = H^2(BG, G_m) = X(B), returned through its coordinate model.
FiniteAbelianGroup brauer_group_of_BG(const SemisimpleGroupSpec& spec);

/// Every isogeny quotient G~/B of the given simply connected group, one per
/// central subgroup B.
std::vector<SemisimpleGroupSpec> isogeny_quotients(const std::vector<SimpleType>& factors,
                                                   unsigned long bound = kDefaultSubgroupOrderBound);

}  // namespace brstack
