#include "threehalves/machine.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace threehalves;

namespace {
std::string run(std::uint64_t n, std::uint32_t a, std::uint32_t b) {
	return toString(runMachine(n, MachineConfig{a, b}).numeral);
}
} // namespace

TEST(Machine, Examples)
{
	EXPECT_EQ(run(5, 1, 2), "101");
	EXPECT_EQ(run(5, 2, 3), "22");
	EXPECT_EQ(run(5, 4, 6), "5");
	EXPECT_EQ(run(10, 2, 3), "2101");
	EXPECT_EQ(run(0, 2, 3), "0");
}

TEST(Machine, MatchesSingleExplosionOracle)
{
	for (auto [a, b] : {std::pair{1u, 2u}, {2u, 3u}, {4u, 6u}, {3u, 5u}, {1u, 10u}})
		for (std::uint64_t n = 0; n <= 500; ++n)
			ASSERT_EQ(run(n, a, b), oracle::machine(n, a, b)) << n << " in " << b << "/" << a;
}

TEST(Machine, RejectsBadConfig)
{
	EXPECT_THROW(runMachine(3, MachineConfig{3, 3}), std::invalid_argument);
	EXPECT_THROW(runMachine(3, MachineConfig{0, 2}), std::invalid_argument);
	EXPECT_THROW(runMachine(3, MachineConfig{5, 2}), std::invalid_argument);
}

TEST(Machine, Trace)
{
	auto r = runMachine(5, MachineConfig{1, 2}, true);
	ASSERT_EQ(r.state.trace.size(), 3u);
	EXPECT_EQ(formatExplosion(r.state.trace[0], {1, 2}), "box 0: 5 → 3, box 1 += 1");
	EXPECT_EQ(formatExplosion(r.state.trace[1], {1, 2}), "box 0: 3 → 1, box 1 += 1");
	EXPECT_EQ(formatExplosion(r.state.trace[2], {1, 2}), "box 1: 2 → 0, box 2 += 1");
	EXPECT_EQ(r.state.boxes, (std::vector<std::uint64_t>{1, 0, 1}));

	auto t = runMachine(5, MachineConfig{2, 3}, true);
	ASSERT_EQ(t.state.trace.size(), 1u);
	EXPECT_EQ(formatExplosion(t.state.trace[0], {2, 3}), "box 0: 5 → 2, box 1 += 2");

	// Untraced runs record nothing but reach the same state.
	EXPECT_TRUE(runMachine(5, MachineConfig{1, 2}).state.trace.empty());
	EXPECT_EQ(runMachine(5, MachineConfig{1, 2}).numeral, r.numeral);
}

TEST(Machine, StableStateInvariant)
{
	for (std::uint64_t n = 0; n < 2000; ++n) {
		auto r = runMachine(n, MachineConfig{2, 3});
		for (auto c : r.state.boxes)
			ASSERT_LT(c, 3u);
		ASSERT_TRUE(r.numeral.intDigits.size() == 1 || r.numeral.intDigits.front() != 0);
	}
}

TEST(Machine, Value)
{
	EXPECT_EQ(valueOfNumeral(parseNumeral("211", {2, 3})), ExactRational(7));
	EXPECT_EQ(valueOfNumeral(parseNumeral("0", {2, 3})), ExactRational(0));
	EXPECT_EQ(valueOfNumeral(parseNumeral("0", {1, 2})), ExactRational(0));
	EXPECT_EQ(valueOfNumeral(parseNumeral("10", {2, 3})), ExactRational(3, 2));
	EXPECT_EQ(valueOfNumeral(parseNumeral("101", {1, 2})), ExactRational(5));
	// 1 + 1*(2/3) + 2*(4/9) = 23/9
	EXPECT_EQ(valueOfNumeral(parseNumeral("1.12", {2, 3})), ExactRational(23, 9));
	EXPECT_EQ(valueOfNumeral(parseNumeral("0.1", {1, 2})), ExactRational(1, 2));
}

TEST(Machine, ValueMatchesOracle)
{
	for (std::uint64_t n = 0; n < 3000; ++n) {
		auto s = toString(runMachine(n, {2, 3}).numeral);
		auto d = oracle::value32(s);
		ExactRational expect(BigInt(static_cast<long long>(d.num)), BigInt(1) << d.exp);
		ASSERT_EQ(valueOfNumeral(parseNumeral(s, {2, 3})), expect) << s;
	}
}

TEST(Machine, AddDots)
{
	auto x = parseNumeral("101", {2, 3});
	auto y = addDots(x, 2);
	EXPECT_EQ(toString(y), "120");
	EXPECT_EQ(valueOfNumeral(y), ExactRational(21, 4));
	EXPECT_EQ(toString(addDots(parseNumeral("0", {2, 3}), 7)), "211");
	EXPECT_EQ(toString(addDots(parseNumeral("1", {2, 3}), 0)), "1");
	EXPECT_THROW(addDots(parseNumeral("1.1", {2, 3}), 1), std::invalid_argument);
}

TEST(Machine, AddDotsProperties)
{
	std::mt19937_64 rng(11);
	for (int i = 0; i < 2000; ++i) {
		Numeral x = runMachine(rng() % 5000, {2, 3}).numeral;
		// Perturb to a non-integer-valued stable string.
		x.intDigits.back() = static_cast<std::uint32_t>(rng() % 3);
		std::uint64_t m = rng() % 200, n = rng() % 200;
		Numeral once = addDots(x, m + n);
		ASSERT_EQ(once, addDots(addDots(x, m), n));
		ASSERT_EQ(valueOfNumeral(once), valueOfNumeral(x) + ExactRational(m + n));
	}
}

TEST(Machine, Base64IsNotBase32)
{
	bool bigDigit = false;
	for (std::uint64_t n = 0; n <= 100 && !bigDigit; ++n)
		for (auto d : runMachine(n, {4, 6}).numeral.intDigits)
			bigDigit = bigDigit || d >= 3;
	EXPECT_TRUE(bigDigit);
}

TEST(Machine, ParseErrors)
{
	EXPECT_THROW(parseNumeral("13", {2, 3}), std::invalid_argument);
	EXPECT_THROW(parseNumeral("012", {2, 3}), std::invalid_argument);
	EXPECT_THROW(parseNumeral("", {2, 3}), std::invalid_argument);
	EXPECT_THROW(parseNumeral("1.2.1", {2, 3}), std::invalid_argument);
	EXPECT_THROW(toString(runMachine(20, {1, 11}).numeral), std::domain_error);
}
