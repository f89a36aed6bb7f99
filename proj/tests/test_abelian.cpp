#include "brstack/abelian.hpp"
#include "brstack/error.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace brstack;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

FiniteAbelianGroup group(std::initializer_list<long> xs) { return FiniteAbelianGroup(ints(xs)); }

void check_snf(const IntegerMatrix& a, const SmithDecomposition& s) {
  REQUIRE(s.left.rows() == a.rows());
  REQUIRE(s.right.rows() == a.cols());
  CHECK(s.left * a * s.right == s.diagonal_matrix());
  CHECK(abs(oracle::determinant(s.left)) == 1);
  CHECK(abs(oracle::determinant(s.right)) == 1);
  bool seen_zero = false;
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    CHECK(s.diagonal[i] >= 0);
    if (s.diagonal[i] == 0) {
      seen_zero = true;
      continue;
    }
    CHECK_FALSE(seen_zero);
    if (i + 1 < s.diagonal.size() && s.diagonal[i + 1] != 0) {
      CHECK(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()));
    }
  }
}

}  // namespace

TEST_CASE("smith normal form: worked examples") {
  const IntegerMatrix one{{2}};
  auto s = smith_normal_form(one);
  CHECK(s.diagonal == ints({2}));
  CHECK(s.left == IntegerMatrix{{1}});
  CHECK(s.right == IntegerMatrix{{1}});

  s = smith_normal_form(IntegerMatrix::identity(2));
  CHECK(s.diagonal == ints({1, 1}));

  // A2 Cartan matrix: det 3, gcd of entries 1, so D = diag(1, 3).
  const IntegerMatrix a2{{2, -1}, {-1, 2}};
  s = smith_normal_form(a2);
  CHECK(s.diagonal == ints({1, 3}));
  check_snf(a2, s);
  CHECK(oracle::determinant(a2) == 3);
}

TEST_CASE("smith normal form: degenerate shapes") {
  SUBCASE("zero matrix") {
    const IntegerMatrix z(2, 3);
    const auto s = smith_normal_form(z);
    CHECK(s.diagonal == ints({0, 0}));
    check_snf(z, s);
  }
  SUBCASE("row and column vectors") {
    const IntegerMatrix row{{6, 10, 15}};
    auto s = smith_normal_form(row);
    CHECK(s.diagonal == ints({1}));
    check_snf(row, s);
    const IntegerMatrix col = row.transposed();
    s = smith_normal_form(col);
    CHECK(s.diagonal == ints({1}));
    check_snf(col, s);
  }
  SUBCASE("negative entries give a nonnegative diagonal") {
    const IntegerMatrix m{{-4, 0}, {0, -6}};
    const auto s = smith_normal_form(m);
    CHECK(s.diagonal == ints({2, 12}));
    check_snf(m, s);
  }
  SUBCASE("rank deficient") {
    const IntegerMatrix m{{2, 4, 6}, {1, 2, 3}, {3, 6, 9}};
    const auto s = smith_normal_form(m);
    CHECK(s.diagonal == ints({1, 0, 0}));
    check_snf(m, s);
  }
  SUBCASE("empty") {
    const IntegerMatrix e(0, 0);
    const auto s = smith_normal_form(e);
    CHECK(s.diagonal.empty());
  }
}

TEST_CASE("smith normal form: randomized invariants") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const IntegerMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), -20, 20);
    const auto s = smith_normal_form(a);
    check_snf(a, s);
    if (a.rows() == a.cols()) {
      const Integer det = oracle::determinant(a);
      Integer prod = 1;
      for (const auto& d : s.diagonal) prod *= d;
      CHECK(prod == abs(det));
    }
  }
}

TEST_CASE("smith normal form: entries beyond machine width") {
  IntegerMatrix m(2, 2);
  m(0, 0) = Integer("123456789012345678901234567890");
  m(0, 1) = Integer("987654321098765432109876543210");
  m(1, 0) = 3;
  m(1, 1) = 7;
  const auto s = smith_normal_form(m);
  check_snf(m, s);
  CHECK(s.diagonal[0] * s.diagonal[1] == abs(oracle::determinant(m)));
}

TEST_CASE("integer kernel") {
  const IntegerMatrix m{{1, 2, 3}, {2, 4, 6}};
  const IntegerMatrix k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK(m * k == IntegerMatrix(2, 2));
  CHECK(integer_kernel(IntegerMatrix::identity(3)).cols() == 0);
}

TEST_CASE("cokernel") {
  CHECK(cokernel(IntegerMatrix::identity(2)) == Cokernel{FiniteAbelianGroup(), 0});
  CHECK(cokernel(IntegerMatrix{{2, -1}, {-1, 2}}) == Cokernel{group({3}), 0});
  // A1 Cartan matrix: center of SL2 is mu_2.
  CHECK(cokernel(IntegerMatrix{{2}}) == Cokernel{group({2}), 0});
  CHECK(cokernel(IntegerMatrix(2, 1)).free_rank == 2);
  CHECK(cokernel(IntegerMatrix{{2}, {0}}) == Cokernel{group({2}), 1});
  CHECK(cokernel(IntegerMatrix{{2, 0, 0}}) == Cokernel{group({2}), 0});
}

TEST_CASE("cokernel is invariant under unimodular changes of basis") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng);
    const std::size_t c = dim(rng);
    const IntegerMatrix a = oracle::random_matrix(rng, r, c, -9, 9);
    const IntegerMatrix u = oracle::random_unimodular(rng, r);
    const IntegerMatrix v = oracle::random_unimodular(rng, c);
    CHECK(cokernel(u * a * v) == cokernel(a));
  }
}

TEST_CASE("finite abelian group construction") {
  CHECK(FiniteAbelianGroup().order() == 1);
  CHECK(group({2, 4}).order() == 8);
  CHECK(group({2, 4}).to_string() == "Z/2 x Z/4");
  CHECK(FiniteAbelianGroup().to_string() == "trivial");
  CHECK_THROWS_AS(group({4, 2}), Error);
  CHECK_THROWS_AS(group({1}), Error);
  CHECK_THROWS_AS(group({2, 3}), Error);
  CHECK(FiniteAbelianGroup::from_moduli(ints({2, 3})) == group({6}));
  CHECK(FiniteAbelianGroup::from_moduli(ints({4, 6})) == group({2, 12}));
  CHECK(FiniteAbelianGroup::from_moduli(ints({1, 1})) == FiniteAbelianGroup());
  CHECK(FiniteAbelianGroup::cyclic(1).is_trivial());
}

TEST_CASE("dual group") {
  CHECK(dual_group(FiniteAbelianGroup()) == FiniteAbelianGroup());
  CHECK(dual_group(group({6})) == group({6}));
  CHECK(dual_group(group({2, 4})) == group({2, 4}));
  for (const auto& g : {group({2}), group({3, 9}), group({2, 2, 6})}) CHECK(dual_group(dual_group(g)) == g);
}

TEST_CASE("group element arithmetic") {
  const auto z2 = group({2});
  const auto z3 = group({3});
  const auto z2z4 = group({2, 4});
  CHECK(add(GroupElement(z2, ints({1})), GroupElement(z2, ints({1}))) == GroupElement(z2, ints({0})));
  CHECK(negate(GroupElement(z3, ints({1}))) == GroupElement(z3, ints({2})));
  CHECK(scale(3, GroupElement(z2z4, ints({1, 2}))) == GroupElement(z2z4, ints({1, 2})));
  CHECK(GroupElement(z2z4, ints({-1, 9})).coords() == ints({1, 1}));
  CHECK(GroupElement(z2z4, ints({1, 1})).order() == 4);
  CHECK(GroupElement(z2z4, ints({1, 2})).order() == 2);
  CHECK_THROWS_AS(add(GroupElement(z2, ints({1})), GroupElement(z3, ints({1}))), Error);
  CHECK_THROWS_AS(GroupElement(z2z4, ints({1})), Error);
}

TEST_CASE("group axioms under random sampling") {
  std::mt19937_64 rng(99);
  const std::vector<FiniteAbelianGroup> groups{group({2}), group({12}), group({2, 4}), group({3, 3, 9}),
                                               FiniteAbelianGroup()};
  for (const auto& g : groups) {
    auto random_element = [&] {
      std::vector<Integer> c;
      for (const auto& n : g.invariant_factors()) {
        std::uniform_int_distribution<long> d(-100, 100);
        c.emplace_back(d(rng));
        (void)n;
      }
      return GroupElement(g, c);
    };
    const GroupElement zero = GroupElement::identity(g);
    for (int i = 0; i < 50; ++i) {
      const auto x = random_element();
      const auto y = random_element();
      const auto z = random_element();
      CHECK((x + y) + z == x + (y + z));
      CHECK(x + y == y + x);
      CHECK(x + zero == x);
      CHECK(x + negate(x) == zero);
      CHECK(scale(5, x + y) == scale(5, x) + scale(5, y));
      CHECK(scale(g.exponent(), x) == zero);
    }
  }
}

TEST_CASE("subgroup structure from generators") {
  const auto z4 = ints({4});
  CHECK(subgroup_structure(z4, std::vector<std::vector<Integer>>{ints({2})}) == group({2}));
  CHECK(subgroup_structure(z4, std::vector<std::vector<Integer>>{ints({1})}) == group({4}));
  CHECK(subgroup_structure(z4, std::vector<std::vector<Integer>>{}) == FiniteAbelianGroup());
  const auto m = ints({2, 4});
  CHECK(subgroup_structure(m, std::vector<std::vector<Integer>>{ints({1, 2})}) == group({2}));
  CHECK(subgroup_structure(m, std::vector<std::vector<Integer>>{ints({1, 0}), ints({0, 1})}) == group({2, 4}));
  // Non-chain presentation: Z/2 x Z/3 generated by (1, 1) is cyclic of order 6.
  CHECK(subgroup_structure(ints({2, 3}), std::vector<std::vector<Integer>>{ints({1, 1})}) == group({6}));
  CHECK_THROWS_AS(subgroup_structure(m, std::vector<std::vector<Integer>>{ints({1})}), Error);
}

TEST_CASE("enumerate subgroups: small cases") {
  auto orders = [](const std::vector<Subgroup>& subs) {
    std::vector<long> o;
    for (const auto& s : subs) o.push_back(s.order.get_si());
    return o;
  };
  const auto trivial = enumerate_subgroups(FiniteAbelianGroup());
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].structure.is_trivial());

  CHECK(orders(enumerate_subgroups(group({4}))) == std::vector<long>{1, 2, 4});

  const auto klein = enumerate_subgroups(group({2, 2}));
  CHECK(orders(klein) == std::vector<long>{1, 2, 2, 2, 4});
  CHECK(klein.back().structure == group({2, 2}));
}

TEST_CASE("enumerate subgroups: counts match closed-form and literal oracles") {
  for (const auto& moduli : oracle::abelian_groups_up_to(64)) {
    std::vector<Integer> factors(moduli.begin(), moduli.end());
    const FiniteAbelianGroup g(factors);
    const auto subs = enumerate_subgroups(g);
    CAPTURE(g.to_string());
    CHECK(subs.size() == oracle::subgroup_count(moduli));
    if (g.order() <= 12) CHECK(subs.size() == oracle::subgroup_count_by_subsets(moduli));

    std::set<std::set<std::vector<std::uint64_t>>> distinct;
    for (const auto& s : subs) {
      std::vector<std::vector<std::uint64_t>> gens;
      for (const auto& x : s.generators) {
        std::vector<std::uint64_t> c;
        for (const auto& v : x.coords()) c.push_back(v.get_ui());
        gens.push_back(c);
      }
      // The SNF-derived structure agrees with an explicit closure.
      CHECK(oracle::element_orders(moduli, gens) == oracle::element_orders(s.structure));
      distinct.insert(oracle::closure(moduli, gens));
    }
    CHECK(distinct.size() == subs.size());
  }
}

TEST_CASE("enumerate subgroups: bound") {
  CHECK_THROWS_WITH_AS(enumerate_subgroups(group({2, 2}), 3), doctest::Contains("bound"), Error);
  CHECK_NOTHROW(enumerate_subgroups(group({2, 2}), 4));
}
