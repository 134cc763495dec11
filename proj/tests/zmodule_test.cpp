#include "cmk/abelian_group.hpp"
#include "cmk/errors.hpp"
#include "cmk/exactness.hpp"
#include "cmk/normal_form.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

namespace cmk {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

void expect_valid_snf(const IntegerMatrix &m, const SNFDecomposition &snf) {
  ASSERT_EQ(snf.U.rows(), m.rows());
  ASSERT_EQ(snf.V.rows(), m.cols());
  EXPECT_EQ(snf.U * m * snf.V, snf.D) << "source " << m;
  EXPECT_EQ(abs(oracle::cofactor_determinant(snf.U)), 1);
  EXPECT_EQ(abs(oracle::cofactor_determinant(snf.V)), 1);
  for (std::size_t r = 0; r < snf.D.rows(); ++r)
    for (std::size_t c = 0; c < snf.D.cols(); ++c)
      if (r != c)
        EXPECT_EQ(snf.D(r, c), 0);
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GT(diag[i], 0);
    if (i + 1 < diag.size())
      EXPECT_EQ(diag[i + 1] % diag[i], 0) << "divisibility chain broken in " << snf.D;
  }
  for (std::size_t i = diag.size(); i < std::min(m.rows(), m.cols()); ++i)
    EXPECT_EQ(snf.D(i, i), 0);
}

TEST(SmithNormalForm, TwoByTwo) {
  const IntegerMatrix m{{2, 4}, {6, 8}};
  const auto snf = smith_normal_form(m);
  expect_valid_snf(m, snf);
  EXPECT_EQ(snf.D, (IntegerMatrix{{2, 0}, {0, 4}}));
  // Oracle: d1 = gcd of entries, d1 * d2 = |det|.
  EXPECT_EQ(oracle::cofactor_determinant(m), -8);
}

TEST(SmithNormalForm, IdentityAndZero) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix::identity(3)).D, IntegerMatrix::identity(3));
  const auto zero = smith_normal_form(IntegerMatrix::zero(2, 3));
  EXPECT_EQ(zero.D, IntegerMatrix::zero(2, 3));
  expect_valid_snf(IntegerMatrix::zero(2, 3), zero);
}

TEST(SmithNormalForm, EmptyShapes) {
  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}}) {
    const IntegerMatrix m(r, c);
    const auto snf = smith_normal_form(m);
    EXPECT_EQ(snf.U * m * snf.V, snf.D);
    EXPECT_TRUE(snf.diagonal().empty());
  }
}

TEST(SmithNormalForm, RandomMatricesSatisfyInvariants) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    expect_valid_snf(m, smith_normal_form(m));
  }
}

TEST(SmithNormalForm, EntriesBeyondMachineWords) {
  const Integer big("123456789012345678901234567890");
  IntegerMatrix m(2, 2, {big, big + 1, 3 * big, 3 * big + 5});
  const auto snf = smith_normal_form(m);
  expect_valid_snf(m, snf);
  const auto diag = snf.diagonal();
  ASSERT_EQ(diag.size(), 2u);
  EXPECT_EQ(diag[0] * diag[1], abs(determinant(m)));
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = oracle::random_matrix(rng, n, n, -9, 9);
      EXPECT_EQ(determinant(m), oracle::cofactor_determinant(m)) << m;
    }
  EXPECT_THROW(determinant(IntegerMatrix(2, 3)), InputError);
}

TEST(Cokernel, Examples) {
  const auto z = cokernel(IntegerMatrix{{-1, 0}, {2, -1}, {-1, 1}});
  EXPECT_EQ(z.free_rank(), 1u);
  EXPECT_TRUE(z.invariant_factors().empty());
  const auto inv = oracle::hermite_cokernel(IntegerMatrix{{-1, 0}, {2, -1}, {-1, 1}});
  EXPECT_EQ(inv.free_rank, 1u);
  EXPECT_TRUE(inv.factors.empty());

  EXPECT_EQ(cokernel(IntegerMatrix{{2}}), FGAbelianGroup::from_orders(0, ints({2})));
  const auto z6 = cokernel(IntegerMatrix{{1, 0}, {0, 6}});
  EXPECT_EQ(z6.free_rank(), 0u);
  EXPECT_EQ(z6.invariant_factors(), ints({6}));
}

TEST(Cokernel, OrderEqualsAbsDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = oracle::random_matrix(rng, n, n, -9, 9);
    const Integer det = oracle::cofactor_determinant(m);
    if (det == 0)
      continue;
    const auto g = cokernel(m);
    EXPECT_EQ(g.free_rank(), 0u);
    EXPECT_EQ(g.torsion_order(), abs(det)) << m;
  }
}

TEST(Cokernel, InvariantUnderUnimodularChange) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    const auto u = oracle::random_unimodular(rng, m.rows());
    const auto v = oracle::random_unimodular(rng, m.cols());
    EXPECT_EQ(cokernel(u * m * v), cokernel(m)) << m;
  }
}

TEST(FGAbelianGroup, CanonicalForm) {
  const auto g = FGAbelianGroup::from_orders(1, ints({4, 6, 1, 0, -3}));
  EXPECT_EQ(g.free_rank(), 2u);
  // Z/4 + Z/6 + Z/3 = (Z/2 + Z/3) + (Z/4 + Z/3)
  EXPECT_EQ(g.invariant_factors(), ints({6, 12}));
  EXPECT_EQ(g, FGAbelianGroup::from_orders(2, ints({12, 6})));
  EXPECT_EQ(FGAbelianGroup::from_orders(0, ints({2, 3})).invariant_factors(), ints({6}));
  EXPECT_EQ(g.to_string(), "Z^2 + Z/6 + Z/12");
  EXPECT_EQ(FGAbelianGroup{}.to_string(), "0");
}

TEST(KernelLattice, Examples) {
  const auto k = kernel_lattice(IntegerMatrix{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(image_lattice(k), image_lattice(IntegerMatrix{{1}, {-1}}));

  EXPECT_EQ(kernel_lattice(IntegerMatrix::identity(2)).cols(), 0u);

  const IntegerMatrix m{{2, 4}};
  const auto k2 = kernel_lattice(m);
  ASSERT_EQ(k2.cols(), 1u);
  EXPECT_TRUE((m * k2).is_zero());
  // Same lattice as (2, -1): the 2x2 matrix [k2 | (2,-1)] has det 0 and
  // the basis vector is primitive.
  IntegerMatrix pair(2, 2, {k2(0, 0), 2, k2(1, 0), -1});
  EXPECT_EQ(oracle::cofactor_determinant(pair), 0);
  EXPECT_EQ(gcd(k2(0, 0), k2(1, 0)), 1);
}

TEST(KernelLattice, RandomBasesAreSaturatedAndFullRank) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), -4, 4);
    const auto k = kernel_lattice(m);
    ASSERT_EQ(k.rows(), m.cols());
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols(), m.cols() - rank(m));
    // A full-rank sublattice of ker M is all of ker M iff Z^n / it is free.
    EXPECT_TRUE(cokernel(k).is_free()) << m;
  }
}

TEST(ImageLattice, Examples) {
  const auto l = image_lattice(IntegerMatrix{{2, 4}, {6, 8}});
  ASSERT_EQ(l.cols(), 2u);
  EXPECT_EQ(abs(determinant(l)), 8);
  EXPECT_EQ(image_lattice(IntegerMatrix::zero(3, 2)).cols(), 0u);
  EXPECT_EQ(image_lattice(IntegerMatrix::identity(3)), IntegerMatrix::identity(3));
}

TEST(ImageLattice, MatchesIndependentHermiteOracle) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    EXPECT_EQ(image_lattice(m), oracle::hermite_basis(m)) << m;
  }
}

TEST(Exactness, Examples) {
  const IntegerMatrix inclusion{{1, 0}, {0, 1}, {0, 0}};
  const IntegerMatrix projection{{0, 0, 1}};
  EXPECT_TRUE(is_exact_at(inclusion, projection).exact);

  const auto doubling = is_exact_at(IntegerMatrix{{2}}, IntegerMatrix{{0}});
  EXPECT_FALSE(doubling.exact);
  EXPECT_NE(doubling.diagnostic.find("proper sublattice"), std::string::npos);

  // T for A4 followed by the zero map to the trivial group: ker = Z^3 but
  // coker T = Z, so im T is not all of Z^3.
  const IntegerMatrix t{{-1, 0}, {2, -1}, {-1, 1}};
  const auto tail = is_exact_at(t, IntegerMatrix(0, 3));
  EXPECT_FALSE(tail.exact);
  EXPECT_NE(tail.diagnostic.find("rank"), std::string::npos);

  const auto nonzero = is_exact_at(IntegerMatrix{{1}}, IntegerMatrix{{1}});
  EXPECT_FALSE(nonzero.exact);
  EXPECT_EQ(nonzero.diagnostic, "g o f is nonzero");

  EXPECT_THROW(is_exact_at(IntegerMatrix(2, 1), IntegerMatrix(1, 3)), InputError);
}

TEST(Exactness, SplitSequencesAreExact) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> in, out;
      for (std::size_t i = 0; i < n; ++i)
        ((mask >> i) & 1u ? in : out).push_back(i);
      IntegerMatrix f(n, in.size()), g(out.size(), n);
      for (std::size_t j = 0; j < in.size(); ++j)
        f(in[j], j) = 1;
      for (std::size_t j = 0; j < out.size(); ++j)
        g(j, out[j]) = 1;
      EXPECT_TRUE(is_exact_at(f, g).exact) << "n=" << n << " mask=" << mask;
    }
}

TEST(CoefficientCokernel, Examples) {
  EXPECT_EQ(cokernel_with_coefficients(IntegerMatrix{{2}}, FiniteAbelianGroup::cyclic(4)),
            FiniteAbelianGroup::cyclic(2));
  EXPECT_TRUE(cokernel_with_coefficients(IntegerMatrix::identity(3),
                                         FiniteAbelianGroup({2, 6}))
                  .is_trivial());
  EXPECT_EQ(cokernel_with_coefficients(IntegerMatrix{{0}}, FiniteAbelianGroup::cyclic(6)),
            FiniteAbelianGroup::cyclic(6));
}

TEST(BruteForceCokernel, Examples) {
  EXPECT_EQ(brute_force_cokernel(IntegerMatrix{{2}}, FiniteAbelianGroup::cyclic(4)),
            FiniteAbelianGroup::cyclic(2));
  EXPECT_TRUE(brute_force_cokernel(IntegerMatrix{{1}}, FiniteAbelianGroup::cyclic(5)).is_trivial());
  EXPECT_EQ(brute_force_cokernel(IntegerMatrix{{3, 0}, {0, 1}}, FiniteAbelianGroup::cyclic(3)),
            FiniteAbelianGroup::cyclic(3));
  // Zero map: the cokernel is all of (Z/4 + Z/2)^2.
  EXPECT_EQ(brute_force_cokernel(IntegerMatrix::zero(2, 1), FiniteAbelianGroup({4, 2}))
                .invariant_factors(),
            (std::vector<std::uint64_t>{2, 2, 4, 4}));
}

TEST(BruteForceCokernel, RefusesOverBudget) {
  EXPECT_THROW(brute_force_cokernel(IntegerMatrix::zero(3, 3), FiniteAbelianGroup::cyclic(16), 4000),
               BudgetExceeded);
  EXPECT_NO_THROW(
      brute_force_cokernel(IntegerMatrix::zero(3, 3), FiniteAbelianGroup::cyclic(16), 4096));
}

TEST(BruteForceCokernel, BudgetFromEnvironment) {
  ::setenv("CMK_ORACLE_BUDGET", "10", 1);
  EXPECT_EQ(oracle_budget(), 10u);
  EXPECT_THROW(brute_force_cokernel(IntegerMatrix{{2}}, FiniteAbelianGroup::cyclic(16)),
               BudgetExceeded);
  ::setenv("CMK_ORACLE_BUDGET", "lots", 1);
  EXPECT_THROW(oracle_budget(), InputError);
  ::unsetenv("CMK_ORACLE_BUDGET");
  EXPECT_EQ(oracle_budget(), default_oracle_budget);
}

TEST(CoefficientCokernel, AgreesWithBruteForce) {
  const std::vector<FiniteAbelianGroup> groups = {
      FiniteAbelianGroup::cyclic(2),  FiniteAbelianGroup::cyclic(3),
      FiniteAbelianGroup::cyclic(4),  FiniteAbelianGroup({2, 2}),
      FiniteAbelianGroup::cyclic(6),  FiniteAbelianGroup::cyclic(8),
      FiniteAbelianGroup({2, 4}),     FiniteAbelianGroup::cyclic(9),
      FiniteAbelianGroup({3, 3}),     FiniteAbelianGroup::cyclic(12),
      FiniteAbelianGroup::cyclic(16), FiniteAbelianGroup({4, 4}),
      FiniteAbelianGroup({2, 2, 2, 2}), FiniteAbelianGroup({2, 8}),
  };
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), -4, 4);
    const auto &a = groups[trial % groups.size()];
    EXPECT_EQ(cokernel_with_coefficients(m, a), brute_force_cokernel(m, a))
        << m << " over " << a.to_string();
  }
}

TEST(FiniteAbelianGroup, OrderAndCanonicalForm) {
  const FiniteAbelianGroup g({4, 6, 1});
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.invariant_factors(), (std::vector<std::uint64_t>{2, 12}));
  EXPECT_EQ(g, FiniteAbelianGroup({2, 3, 4}));
  EXPECT_EQ(g.to_string(), "Z/2 + Z/12");
  EXPECT_THROW(FiniteAbelianGroup({0}), InputError);
  EXPECT_THROW(FiniteAbelianGroup({1ULL << 40, 1ULL << 40}), InputError);
}

TEST(IntegerMatrix, HashIsDeterministicAndShapeSensitive) {
  const IntegerMatrix a{{1, 2, 3, 4}};
  const IntegerMatrix b{{1, 2}, {3, 4}};
  EXPECT_EQ(a.hash(), IntegerMatrix({{1, 2, 3, 4}}).hash());
  EXPECT_NE(a.hash(), b.hash());
  EXPECT_EQ(a.hash().rfind("fnv1a64:", 0), 0u);
}

} // namespace
} // namespace cmk
