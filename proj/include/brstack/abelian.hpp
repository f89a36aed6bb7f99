#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace brstack {

using Integer = mpz_class;

// ---------------------------------------------------------------------------
// IntegerMatrix
// ---------------------------------------------------------------------------

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  /// Builds from nested rows; all rows must have equal length.
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntegerMatrix diagonal(std::span<const Integer> diag, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntegerMatrix transposed() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

  std::vector<std::vector<Integer>> to_rows() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Result of smith_normal_form: left * a * right == D, with D diagonal.
struct SmithDecomposition {
  /// Diagonal of D, length min(rows, cols). Nonnegative, each nonzero entry
  /// divides the next, zeros last.
  std::vector<Integer> diagonal;
  IntegerMatrix left;   ///< U, unimodular, rows x rows
  IntegerMatrix right;  ///< V, unimodular, cols x cols

  /// D padded to the shape of the input matrix.
  IntegerMatrix diagonal_matrix() const;
};

/// Smith normal form by unimodular row and column operations, choosing the
/// nonzero entry of least absolute value as pivot.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Basis of the integer kernel {x : a x = 0}, one column per basis vector.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

// ---------------------------------------------------------------------------
// FiniteAbelianGroup / GroupElement
// ---------------------------------------------------------------------------

/// Finite abelian group in invariant-factor form Z/n1 x ... x Z/nk with
/// 2 <= n1 | n2 | ... | nk. The empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Throws Error unless factors form a divisibility chain of integers >= 2.
  explicit FiniteAbelianGroup(std::vector<Integer> invariant_factors);

  /// Canonical form of Z/m1 x ... x Z/mk for arbitrary positive moduli
  /// (moduli equal to 1 are allowed and contribute nothing).
  static FiniteAbelianGroup from_moduli(std::span<const Integer> moduli);
  static FiniteAbelianGroup cyclic(const Integer& n);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  Integer order() const;
  Integer exponent() const;

  std::string to_string() const;  ///< "trivial", "Z/2", "Z/2 x Z/4"

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

std::ostream& operator<<(std::ostream& os, const FiniteAbelianGroup& g);

/// Element of a FiniteAbelianGroup as a tuple of residues.
class GroupElement {
 public:
  /// Coordinates are reduced into [0, n_i). Throws on length mismatch.
  GroupElement(FiniteAbelianGroup group, std::vector<Integer> coords);

  static GroupElement identity(const FiniteAbelianGroup& group);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Integer>& coords() const { return coords_; }
  bool is_identity() const;
  /// Smallest n > 0 with n * x == 0.
  Integer order() const;

  std::string to_string() const;  ///< "(1, 2)"

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& x);

/// Coordinate model of X(B) = Hom(B, G_m): the same invariant factors as B.
/// The identification is non-canonical; over an algebraically closed field
/// it is Cartier duality for the diagonalizable group B.
FiniteAbelianGroup dual_group(const FiniteAbelianGroup& b);

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement negate(const GroupElement& x);
GroupElement scale(const Integer& n, const GroupElement& x);

GroupElement operator+(const GroupElement& x, const GroupElement& y);
GroupElement operator-(const GroupElement& x);
GroupElement operator*(const Integer& n, const GroupElement& x);

// ---------------------------------------------------------------------------
// Cokernels and subgroups
// ---------------------------------------------------------------------------

struct Cokernel {
  FiniteAbelianGroup torsion;
  std::size_t free_rank = 0;

  friend bool operator==(const Cokernel&, const Cokernel&) = default;
};

/// Z^rows / a Z^cols.
Cokernel cokernel(const IntegerMatrix& a);

/// Structure of the subgroup of Z/m1 x ... x Z/mk generated by the given
/// coordinate vectors. Computed from the SNF of the relation lattice
/// {x in Z^s : sum x_j g_j = 0}.
FiniteAbelianGroup subgroup_structure(std::span<const Integer> moduli,
                                      std::span<const std::vector<Integer>> generators);

struct Subgroup {
  std::vector<GroupElement> generators;
  FiniteAbelianGroup structure;
  Integer order;
};

inline constexpr unsigned long kDefaultSubgroupOrderBound = 10'000;

/// Every subgroup of Z/m1 x ... x Z/mk, as generator coordinate lists.
/// Order: by subgroup order, then by discovery. Throws if the group order
/// exceeds `bound`.
std::vector<std::vector<std::vector<Integer>>> enumerate_subgroup_generators(
    std::span<const Integer> moduli, unsigned long bound = kDefaultSubgroupOrderBound);

/// Complete, duplicate-free list of the subgroups of b.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& b,
                                          unsigned long bound = kDefaultSubgroupOrderBound);

}  // namespace brstack
