#include "cmk/errors.hpp"
#include "cmk/group_expression.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cmk {
namespace {

FiniteAbelianGroup fag(std::vector<std::uint64_t> orders) { return FiniteAbelianGroup(std::move(orders)); }

FiniteAbelianGroup concrete(const GroupExpression &e, std::uint64_t q) {
  const auto inst = instantiate(e, q);
  EXPECT_TRUE(inst.ok()) << e.to_string() << " over F_" << q;
  return inst.group.value_or(fag({}));
}

TEST(FiniteField, PrimePowers) {
  const auto f = finite_field(81);
  EXPECT_EQ(f.characteristic, 3u);
  EXPECT_EQ(f.degree, 4u);
  EXPECT_EQ(finite_field(2).degree, 1u);
  for (std::uint64_t bad : {0u, 1u, 6u, 12u, 100u})
    EXPECT_THROW(finite_field(bad), InputError) << bad;
}

TEST(CoefficientSpec, Parse) {
  EXPECT_FALSE(CoefficientSpec::parse("symbolic").is_finite());
  const auto c = CoefficientSpec::parse("ff:9");
  EXPECT_TRUE(c.is_finite());
  EXPECT_EQ(c.q, 9u);
  EXPECT_EQ(c.to_string(), "ff:9");
  EXPECT_EQ(CoefficientSpec::symbolic().to_string(), "symbolic");
  for (const char *bad : {"ff:6", "ff:", "ff:x", "ff:-3", "fp:5", ""})
    EXPECT_THROW(CoefficientSpec::parse(bad), InputError) << bad;
}

TEST(Instantiate, Examples) {
  EXPECT_EQ(concrete(Atom(UnitsAtom{}), 7), fag({6}));
  EXPECT_EQ(concrete(Atom(AdditiveAtom{}), 8), fag({2, 2, 2}));
  const auto dual = concrete(GroupExpression(Atom(UnitsAtom{})) + Atom(AdditiveAtom{}), 5);
  EXPECT_EQ(dual.order(), 20u);
  EXPECT_EQ(dual.order(), oracle::dual_number_unit_count(5));
}

TEST(Instantiate, QuotientsAndCyclics) {
  EXPECT_EQ(concrete(Atom(quotient(UnitsAtom{}, 2)), 5), fag({2}));
  EXPECT_EQ(concrete(Atom(quotient(UnitsAtom{}, 3)), 5), fag({}));
  EXPECT_EQ(concrete(Atom(quotient(AdditiveAtom{}, 3)), 9), fag({3, 3}));
  EXPECT_EQ(concrete(Atom(CyclicAtom{12}), 2), fag({12}));
  EXPECT_EQ(concrete(GroupExpression(), 2), fag({}));
}

TEST(Instantiate, RefusesOpaqueAndFree) {
  const GroupExpression e = GroupExpression(Atom(UnitsAtom{})) +
                            Atom(OpaqueAtom{"G", {"exact: R^x/k^x -> G -> k^+ -> 0"}}) +
                            Atom(ResidueUnitsAtom{}) + Atom(FreeAtom{2});
  const auto inst = instantiate(e, 4);
  EXPECT_FALSE(inst.ok());
  EXPECT_EQ(inst.refused.size(), 3u);
  EXPECT_EQ(partially_instantiate(e, 4).summands().front(), Atom(CyclicAtom{3}));
  EXPECT_THROW(instantiate(e, 10), InputError);
}

TEST(Instantiate, Extensions) {
  const auto coprime = extension(Atom(CyclicAtom{2}), Atom(AdditiveAtom{}));
  EXPECT_EQ(concrete(Atom(coprime), 5), fag({10}));
  // Trivial kernel: the quotient alone.
  EXPECT_EQ(concrete(Atom(extension(Atom(quotient(UnitsAtom{}, 5)), Atom(AdditiveAtom{}))), 9),
            fag({3, 3}));
  // Z/2 by Z/2 could be Z/4 or (Z/2)^2: never guessed.
  const auto open = instantiate(Atom(extension(Atom(CyclicAtom{2}), Atom(CyclicAtom{2}))), 3);
  EXPECT_FALSE(open.ok());
  EXPECT_EQ(open.refused.size(), 1u);
}

TEST(Instantiate, IsAHomomorphism) {
  std::mt19937_64 rng(5);
  const std::vector<Atom> pool = {UnitsAtom{}, AdditiveAtom{}, CyclicAtom{4}, CyclicAtom{6},
                                  quotient(UnitsAtom{}, 2), quotient(AdditiveAtom{}, 2)};
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u})
    for (int trial = 0; trial < 20; ++trial) {
      GroupExpression a, b;
      for (int i = 0; i < 3; ++i) {
        if (rng() % 2) a += pool[rng() % pool.size()];
        if (rng() % 2) b += pool[rng() % pool.size()];
      }
      EXPECT_EQ(concrete(a + b, q), concrete(a, q).direct_sum(concrete(b, q)));
    }
}

TEST(Instantiate, MatchesFieldArithmetic) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    EXPECT_EQ(concrete(Atom(UnitsAtom{}), q).order(), oracle::field_unit_count(q));
    EXPECT_EQ(concrete(Atom(AdditiveAtom{}), q).order(), q);
  }
}

TEST(Expression, TextForms) {
  EXPECT_EQ(GroupExpression().to_string(), "0");
  const GroupExpression e = GroupExpression(Atom(UnitsAtom{})) + Atom(quotient(UnitsAtom{}, 2)) +
                            Atom(AdditiveAtom{}) + Atom(ResidueUnitsAtom{});
  EXPECT_EQ(e.to_string(), "k^x + (k^x)/2(k^x) + k^+ + R^x/k^x");
  EXPECT_EQ(Atom(extension(Atom(UnitsAtom{}), Atom(AdditiveAtom{}))).to_string(),
            "ext(0 -> k^x -> E -> k^+ -> 0)");
  EXPECT_EQ(Atom(OpaqueAtom{"G", {}}).kind(), "opaque");
  EXPECT_EQ(to_expression(fag({2, 6})), GroupExpression(Atom(CyclicAtom{2})) + Atom(CyclicAtom{6}));
}

} // namespace
} // namespace cmk
