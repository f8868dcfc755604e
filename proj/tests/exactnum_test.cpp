#include "threehalves/exactnum.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace threehalves;

TEST(ExactRational, Normalize)
{
	EXPECT_EQ(ratNormalize(6, 4).str(), "3/2");
	EXPECT_EQ(ratNormalize(0, 7).numerator(), 0);
	EXPECT_EQ(ratNormalize(0, 7).denominator(), 1);
	EXPECT_EQ(ratNormalize(-3, -6).str(), "1/2");
	EXPECT_EQ(ratNormalize(3, -6).str(), "-1/2");
	EXPECT_THROW(ratNormalize(1, 0), std::domain_error);
}

TEST(ExactRational, PowBase)
{
	const ExactRational b(3, 2);
	EXPECT_EQ(powBase(b, 2), ExactRational(9, 4));
	EXPECT_EQ(powBase(b, -3), ExactRational(8, 27));
	EXPECT_EQ(powBase(b, 0), ExactRational(1));
	EXPECT_THROW(powBase(ExactRational(0), 2), std::domain_error);
	EXPECT_THROW(powBase(ExactRational(-1), 2), std::domain_error);
	for (long k = -20; k <= 20; ++k)
		EXPECT_EQ(powBase(b, k) * powBase(b, -k), ExactRational(1)) << k;
}

TEST(ExactRational, Compare)
{
	EXPECT_EQ(ratCompare(ExactRational(3, 2), ExactRational(10, 7)), std::strong_ordering::greater);
	EXPECT_EQ(ratCompare(ExactRational(1, 2), ExactRational(1, 2)), std::strong_ordering::equal);
	EXPECT_EQ(ratCompare(ExactRational(0), ExactRational(1, 1000000)), std::strong_ordering::less);
}

TEST(ExactRational, RandomArithmetic)
{
	std::mt19937_64 rng(7);
	std::uniform_int_distribution<std::int64_t> any(INT64_MIN / 2, INT64_MAX / 2);
	auto nonzero = [&] {
		std::int64_t v = 0;
		while (v == 0)
			v = any(rng);
		return v;
	};
	for (int i = 0; i < 2000; ++i) {
		ExactRational a(any(rng), nonzero()), b(any(rng), nonzero()), c(any(rng), nonzero());
		ASSERT_EQ((a + b) - b, a);
		ASSERT_EQ(a * b, b * a);
		ASSERT_EQ((a * b) * c, a * (b * c));
		auto sign = (a - b).sign();
		auto ord = ratCompare(a, b);
		ASSERT_EQ(sign < 0, ord == std::strong_ordering::less);
		ASSERT_EQ(sign == 0, ord == std::strong_ordering::equal);
		ASSERT_EQ(sign > 0, ord == std::strong_ordering::greater);
		ASSERT_EQ(gcd(abs(a.numerator()), a.denominator()), a.numerator() == 0 ? a.denominator() : 1);
		ASSERT_GT(a.denominator(), 0);
	}
}

TEST(ExactRational, Decimal)
{
	EXPECT_EQ(ExactRational(27, 16).toDecimal(10), std::make_pair(std::string("1.6875"), true));
	EXPECT_EQ(ExactRational(2, 3).toDecimal(4), std::make_pair(std::string("0.6666"), false));
	EXPECT_EQ(ExactRational(-5, 4).toDecimal(1), std::make_pair(std::string("-1.2"), false));
	EXPECT_EQ(ExactRational(7).toDecimal(3), std::make_pair(std::string("7"), true));
}

TEST(ExactRational, Parse)
{
	EXPECT_EQ(ExactRational::parse("6/4"), ExactRational(3, 2));
	EXPECT_EQ(ExactRational::parse("-12"), ExactRational(-12));
	EXPECT_EQ(ExactRational::parse("1.125"), ExactRational(9, 8));
	EXPECT_EQ(ExactRational::parse("-0.5"), ExactRational(-1, 2));
	EXPECT_THROW(ExactRational::parse("1/0"), std::invalid_argument);
	EXPECT_THROW(ExactRational::parse("abc"), std::invalid_argument);
	EXPECT_THROW(ExactRational::parse(""), std::invalid_argument);
}

TEST(ExactRational, DivisionByZero)
{
	EXPECT_THROW(ExactRational(1) / ExactRational(0), std::domain_error);
}
