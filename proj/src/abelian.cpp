#include "brstack/abelian.hpp"

#include "brstack/error.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace brstack {
namespace {

Integer floor_mod(const Integer& x, const Integer& n) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Elementary operations applied simultaneously to the working matrix and to
// the accumulated transform.
void swap_rows(IntegerMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntegerMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row[dst] += factor * row[src]
void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(src, c) != 0) mpz_addmul(m(dst, c).get_mpz_t(), factor.get_mpz_t(), m(src, c).get_mpz_t());
  }
}

// col[dst] += factor * col[src]
void add_col_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m(r, src) != 0) mpz_addmul(m(r, dst).get_mpz_t(), factor.get_mpz_t(), m(r, src).get_mpz_t());
  }
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

void check_same_group(const GroupElement& x, const GroupElement& y) {
  if (x.group() != y.group()) {
    throw Error("group mismatch: " + x.group().to_string() + " vs " + y.group().to_string());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix: row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const Integer> diag, std::size_t rows,
                                      std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m(i, i) = diag[i];
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error("matrix shape mismatch in product");
  }
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<std::vector<Integer>> IntegerMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) { return os << m.to_string(); }

// ---------------------------------------------------------------------------
// Smith normal form

IntegerMatrix SmithDecomposition::diagonal_matrix() const {
  return IntegerMatrix::diagonal(diagonal, left.rows(), right.rows());
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t steps = std::min(m, n);

  IntegerMatrix d = a;
  IntegerMatrix u = IntegerMatrix::identity(m);
  IntegerMatrix v = IntegerMatrix::identity(n);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      // Pivot: least nonzero |entry| in the trailing block.
      std::size_t pr = m;
      std::size_t pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pr == m || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr == m) {
        exhausted = true;
        break;
      }
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        add_row_multiple(d, i, t, q);
        add_row_multiple(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        add_col_multiple(d, j, t, q);
        add_col_multiple(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row t and column t are clear; enforce that the pivot divides the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(u, t, i, Integer(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }

  SmithDecomposition out;
  out.diagonal.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal.push_back(d(i, i));
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  const auto rank = static_cast<std::size_t>(
      std::count_if(snf.diagonal.begin(), snf.diagonal.end(), [](const Integer& x) { return x != 0; }));
  const std::size_t n = a.cols();
  IntegerMatrix basis(n, n - rank);
  for (std::size_t j = rank; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) basis(r, j - rank) = snf.right(r, j);
  return basis;
}

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw Error("invariant factor " + factors_[i].get_str() + " is < 2");
    }
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t())) {
      throw Error("invariant factors " + factors_[i - 1].get_str() + ", " + factors_[i].get_str() +
                  " break the divisibility chain");
    }
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_moduli(std::span<const Integer> moduli) {
  for (const Integer& m : moduli) {
    if (m < 1) throw Error("modulus " + m.get_str() + " must be positive");
  }
  const auto snf = smith_normal_form(IntegerMatrix::diagonal(moduli, moduli.size(), moduli.size()));
  std::vector<Integer> factors;
  for (const Integer& d : snf.diagonal)
    if (d > 1) factors.push_back(d);
  return FiniteAbelianGroup(std::move(factors));
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(const Integer& n) {
  const Integer moduli[] = {n};
  return from_moduli(moduli);
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const Integer& f : factors_) o *= f;
  return o;
}

Integer FiniteAbelianGroup::exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + factors_[i].get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const FiniteAbelianGroup& g) { return os << g.to_string(); }

FiniteAbelianGroup dual_group(const FiniteAbelianGroup& b) { return b; }

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(FiniteAbelianGroup group, std::vector<Integer> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.rank()) {
    throw Error("element has " + std::to_string(coords_.size()) + " coordinates but " +
                group_.to_string() + " has rank " + std::to_string(group_.rank()));
  }
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = floor_mod(coords_[i], group_.invariant_factors()[i]);
}

GroupElement GroupElement::identity(const FiniteAbelianGroup& group) {
  return GroupElement(group, std::vector<Integer>(group.rank(), Integer(0)));
}

bool GroupElement::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer GroupElement::order() const {
  Integer o = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Integer& n = group_.invariant_factors()[i];
    o = lcm(o, n / gcd(coords_[i], n));
  }
  return o;
}

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].get_str();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const GroupElement& x) { return os << x.to_string(); }

GroupElement add(const GroupElement& x, const GroupElement& y) {
  check_same_group(x, y);
  std::vector<Integer> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords()[i] + y.coords()[i];
  return GroupElement(x.group(), std::move(c));
}

GroupElement negate(const GroupElement& x) {
  std::vector<Integer> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -x.coords()[i];
  return GroupElement(x.group(), std::move(c));
}

GroupElement scale(const Integer& n, const GroupElement& x) {
  std::vector<Integer> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = n * x.coords()[i];
  return GroupElement(x.group(), std::move(c));
}

GroupElement operator+(const GroupElement& x, const GroupElement& y) { return add(x, y); }
GroupElement operator-(const GroupElement& x) { return negate(x); }
GroupElement operator*(const Integer& n, const GroupElement& x) { return scale(n, x); }

// ---------------------------------------------------------------------------
// Cokernels and subgroups

Cokernel cokernel(const IntegerMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  std::vector<Integer> torsion;
  std::size_t nonzero = 0;
  for (const Integer& d : snf.diagonal) {
    if (d != 0) ++nonzero;
    if (d > 1) torsion.push_back(d);
  }
  return Cokernel{FiniteAbelianGroup(std::move(torsion)), a.rows() - nonzero};
}

FiniteAbelianGroup subgroup_structure(std::span<const Integer> moduli,
                                      std::span<const std::vector<Integer>> generators) {
  const std::size_t k = moduli.size();
  const std::size_t s = generators.size();
  for (const Integer& m : moduli) {
    if (m < 1) throw Error("modulus " + m.get_str() + " must be positive");
  }
  if (s == 0) return FiniteAbelianGroup();

  // [G | diag(m)]; the kernel projected onto the first s coordinates is the
  // relation lattice of the generators.
  IntegerMatrix system(k, s + k);
  for (std::size_t j = 0; j < s; ++j) {
    if (generators[j].size() != k) {
      throw Error("generator " + std::to_string(j) + " has " + std::to_string(generators[j].size()) +
                  " coordinates, expected " + std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) system(i, j) = generators[j][i];
  }
  for (std::size_t i = 0; i < k; ++i) system(i, s + i) = moduli[i];

  const IntegerMatrix kernel = integer_kernel(system);
  IntegerMatrix relations(s, kernel.cols());
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < kernel.cols(); ++c) relations(r, c) = kernel(r, c);

  Cokernel coker = cokernel(relations);
  if (coker.free_rank != 0) throw Error("internal: subgroup of a finite group has free part");
  return std::move(coker.torsion);
}

namespace {

// Mixed-radix indexing of the elements of Z/m1 x ... x Z/mk.
class ElementIndex {
 public:
  explicit ElementIndex(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
    size_ = 1;
    for (auto m : moduli_) size_ *= m;
  }

  std::uint64_t size() const { return size_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    std::uint64_t weight = 1;
    for (auto m : moduli_) {
      out += ((a % m + b % m) % m) * weight;
      a /= m;
      b /= m;
      weight *= m;
    }
    return out;
  }

  std::vector<Integer> coords(std::uint64_t a) const {
    std::vector<Integer> c;
    c.reserve(moduli_.size());
    for (auto m : moduli_) {
      c.emplace_back(static_cast<unsigned long>(a % m));
      a /= m;
    }
    return c;
  }

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t size_ = 1;
};

struct SubgroupNode {
  std::vector<bool> members;
  std::vector<std::uint64_t> elements;
  std::vector<std::uint64_t> generators;
};

SubgroupNode extend(const ElementIndex& idx, const SubgroupNode& h, std::uint64_t g) {
  SubgroupNode out;
  out.members = h.members;
  out.elements = h.elements;
  out.generators = h.generators;
  out.generators.push_back(g);
  // <H, g> is the union of the cosets H + j g until j g falls back into H.
  for (std::uint64_t shift = g; !h.members[shift]; shift = idx.add(shift, g)) {
    for (std::uint64_t e : h.elements) {
      const std::uint64_t x = idx.add(e, shift);
      if (!out.members[x]) {
        out.members[x] = true;
        out.elements.push_back(x);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::vector<Integer>>> enumerate_subgroup_generators(
    std::span<const Integer> moduli, unsigned long bound) {
  Integer order = 1;
  for (const Integer& m : moduli) {
    if (m < 1) throw Error("modulus " + m.get_str() + " must be positive");
    order *= m;
  }
  if (order > bound) {
    throw Error("subgroup enumeration bound exceeded: group order " + order.get_str() + " > " +
                std::to_string(bound));
  }

  std::vector<std::uint64_t> small;
  for (const Integer& m : moduli) small.push_back(m.get_ui());
  const ElementIndex idx(small);

  SubgroupNode trivial;
  trivial.members.assign(idx.size(), false);
  trivial.members[0] = true;
  trivial.elements = {0};

  std::vector<SubgroupNode> found{trivial};
  std::unordered_set<std::vector<bool>> seen{trivial.members};
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (std::uint64_t g = 0; g < idx.size(); ++g) {
      if (found[next].members[g]) continue;
      SubgroupNode bigger = extend(idx, found[next], g);
      if (seen.insert(bigger.members).second) found.push_back(std::move(bigger));
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const SubgroupNode& a, const SubgroupNode& b) {
    return a.elements.size() < b.elements.size();
  });

  std::vector<std::vector<std::vector<Integer>>> out;
  out.reserve(found.size());
  for (const SubgroupNode& h : found) {
    std::vector<std::vector<Integer>> gens;
    for (std::uint64_t g : h.generators) gens.push_back(idx.coords(g));
    out.push_back(std::move(gens));
  }
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& b, unsigned long bound) {
  const auto& moduli = b.invariant_factors();
  std::vector<Subgroup> out;
  for (auto& gens : enumerate_subgroup_generators(moduli, bound)) {
    Subgroup h;
    h.structure = subgroup_structure(moduli, gens);
    h.order = h.structure.order();
    for (auto& c : gens) h.generators.emplace_back(b, std::move(c));
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace brstack
