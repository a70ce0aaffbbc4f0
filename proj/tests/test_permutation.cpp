#include <gtest/gtest.h>

#include "maxsub/errors.hpp"
#include "maxsub/permutation.hpp"

using maxsub::Permutation;

TEST(Permutation, ComposesLeftToRight)
{
  auto a = Permutation::parse("(1 2)", 3);
  auto b = Permutation::parse("(2 3)", 3);
  EXPECT_EQ((a * b).to_cycles(), "(1 3 2)");
}

TEST(Permutation, IdentityAndInverseLaws)
{
  auto x = Permutation::parse("(1 2 3)", 3);
  auto y = Permutation::parse("(1 3 2)", 3);
  EXPECT_EQ(Permutation(3) * x, x);
  EXPECT_TRUE((x * y).is_identity());
  EXPECT_TRUE((x * x.inverse()).is_identity());
}

TEST(Permutation, ParsesAndPrints)
{
  auto x = Permutation::parse(" ( 1 ,2 3)(4 5) ", 6);
  EXPECT_EQ(x.to_cycles(), "(1 2 3)(4 5)");
  EXPECT_EQ(x.order(), 6u);
  EXPECT_EQ(Permutation::parse("()", 4).to_cycles(), "()");
  EXPECT_THROW(Permutation::parse("(1 2", 3), maxsub::ParseError);
  EXPECT_THROW(Permutation::parse("(1 1)", 3), maxsub::ParseError);
}

TEST(Permutation, DegreeMismatchThrows)
{
  EXPECT_THROW(Permutation(3) * Permutation(4), maxsub::DegreeMismatch);
}

TEST(Permutation, ConjugateAndCommutator)
{
  auto a = Permutation::parse("(1 2 3)", 4);
  auto g = Permutation::parse("(3 4)", 4);
  EXPECT_EQ(a.conjugate(g), g.inverse() * a * g);
  EXPECT_EQ(maxsub::commutator(a, g), a.inverse() * g.inverse() * a * g);
}
