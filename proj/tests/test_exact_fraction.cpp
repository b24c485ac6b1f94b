#include <monosens/exact_fraction.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

using monosens::ExactFraction;

TEST( ExactFraction, ComparesByValue )
{
  EXPECT_EQ( ExactFraction( 2, 2 ), ExactFraction( 1, 1 ) );
  EXPECT_EQ( ExactFraction( 0, 5 ), ExactFraction( 0, 0 ) );
  EXPECT_LT( ExactFraction( 3, 3 ), ExactFraction( 1, 1 ) );
  EXPECT_GT( ExactFraction( 12, 3 ), ExactFraction( 1, 0 ) );
}

TEST( ExactFraction, ReducedStripsCommonPowersOfTwo )
{
  const auto r = ExactFraction( 12, 3 ).reduced();
  EXPECT_EQ( r.numerator(), 3u );
  EXPECT_EQ( r.log2_denominator(), 1u );
  EXPECT_EQ( ExactFraction( 0, 7 ).reduced().log2_denominator(), 0u );
  EXPECT_EQ( ExactFraction( 8, 2 ).reduced().log2_denominator(), 0u );
}

TEST( ExactFraction, AdditionAlignsDenominators )
{
  const auto sum = ExactFraction( 1, 1 ) + ExactFraction( 3, 3 );
  EXPECT_EQ( sum, ExactFraction( 7, 3 ) );
  EXPECT_EQ( sum.log2_denominator(), 3u );
  EXPECT_DOUBLE_EQ( sum.to_double(), 0.875 );
  EXPECT_EQ( sum.to_string(), "7/8" );
}

TEST( ExactFraction, RejectsOversizedDenominatorAndOverflow )
{
  EXPECT_THROW( ExactFraction( 1, 64 ), std::invalid_argument );
  ExactFraction big( ~std::uint64_t{ 0 }, 0 );
  EXPECT_THROW( big += ExactFraction( 1, 0 ), std::overflow_error );
}
