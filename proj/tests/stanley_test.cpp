#include "threehalves/sequences.hpp"
#include "threehalves/stanley.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace threehalves;

namespace {
std::vector<std::uint64_t> prefix(const std::vector<std::uint64_t> &v, std::size_t n) {
	return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}
} // namespace

TEST(Stanley, LayerPrefixes)
{
	Partition p = greedyPartition(10000);
	EXPECT_EQ(prefix(p.layers[0], 11), (std::vector<std::uint64_t>{0, 1, 3, 4, 9, 10, 12, 13, 27, 28, 30}));
	EXPECT_EQ(prefix(p.layers[1], 5), (std::vector<std::uint64_t>{2, 5, 6, 11, 14}));
	EXPECT_EQ(prefix(p.layers[2], 7), (std::vector<std::uint64_t>{7, 8, 16, 17, 19, 20, 34}));
	EXPECT_EQ(prefix(p.layers[3], 7), (std::vector<std::uint64_t>{21, 22, 24, 25, 48, 49, 51}));
}

TEST(Stanley, MatchesLayerwiseOracle)
{
	const std::uint64_t bound = 3000;
	Partition p = greedyPartition(bound);
	auto want = oracle::layerwiseGreedy(bound, 8);
	for (std::size_t j = 0; j < want.size(); ++j)
		ASSERT_EQ(p.layers.at(j), want[j]) << "layer " << j;
}

TEST(Stanley, LayersAreThreeFreeAndCover)
{
	Partition p = greedyPartition(2000);
	std::size_t total = 0;
	for (const auto &layer : p.layers) {
		EXPECT_TRUE(oracle::threeFreeCubic(layer));
		total += layer.size();
	}
	EXPECT_EQ(total, 2001u);
	for (std::uint64_t n = 0; n <= 2000; ++n) {
		const auto &l = p.layers[p.layerOf[n]];
		ASSERT_TRUE(std::binary_search(l.begin(), l.end(), n));
	}
}

TEST(Stanley, LayerZeroHasNoTernaryTwo)
{
	Partition p = greedyPartition(5000);
	for (std::uint64_t n = 0; n <= 5000; ++n) {
		bool noTwo = true;
		for (std::uint64_t m = n; m > 0; m /= 3)
			noTwo = noTwo && m % 3 != 2;
		ASSERT_EQ(p.layerOf[n] == 0, noTwo) << n;
	}
}

TEST(Stanley, ScriptLayers)
{
	auto s0 = scriptLayer(0, 6);
	std::vector<std::string> got;
	for (const auto &s : s0.elements)
		got.push_back(toString(s));
	EXPECT_EQ(got, (std::vector<std::string>{"0", "1", "10", "11", "100", "101"}));

	for (std::uint64_t k = 0; k <= 3; ++k) {
		auto layer = scriptLayer(k, 20);
		std::vector<std::uint64_t> ternary;
		for (const auto &s : layer.elements)
			ternary.push_back(ternaryValue(s));
		EXPECT_TRUE(std::is_sorted(ternary.begin(), ternary.end()));
		EXPECT_TRUE(oracle::threeFreeCubic(ternary)) << k;
		EXPECT_TRUE(twoOutOfThree(layer.elements).holds) << k;
	}
	EXPECT_EQ(ternaryValue(parse32("212")), 23u);
	EXPECT_EQ(ternaryValue(parse32("2100")), 63u);
}

TEST(Stanley, ScriptLayerFirstsAreCrossSequence)
{
	const std::vector<std::uint64_t> firsts{0, 2, 7, 21, 23, 64, 69, 71, 193, 207, 209, 214};
	for (std::uint64_t k = 0; k < firsts.size(); ++k)
		EXPECT_EQ(ternaryValue(scriptLayer(k, 1).elements.front()), firsts[k]) << k;
}

TEST(Stanley, ThreeFreeHelper)
{
	EXPECT_TRUE(isThreeFree(std::vector<std::uint64_t>{0, 1, 3, 4, 9}));
	EXPECT_FALSE(isThreeFree(std::vector<std::uint64_t>{0, 2, 4}));
	EXPECT_FALSE(isThreeFree(std::vector<std::uint64_t>{9, 1, 5}));
}

TEST(Stanley, TwoOutOfThree)
{
	std::vector<Numeral32> bad{parse32("10"), parse32("11"), parse32("12")};
	EXPECT_FALSE(twoOutOfThree(bad).holds);
	std::vector<Numeral32> prefixes{parse32("1"), parse32("11"), parse32("21")};
	auto r = twoOutOfThree(prefixes);
	EXPECT_FALSE(r.holds);
	EXPECT_FALSE(r.witness.empty());
	std::vector<Numeral32> good{parse32("0"), parse32("1"), parse32("20"), parse32("21")};
	EXPECT_TRUE(twoOutOfThree(good).holds);
}

TEST(Stanley, CrossSequenceMethodsAgree)
{
	const std::vector<std::uint64_t> want{0, 2, 7, 21, 23, 64, 69, 71, 193, 207, 209, 214};
	for (auto m : {CrossMethod::Greedy, CrossMethod::Reinterpret, CrossMethod::DictIndex15, CrossMethod::HalfA261691}) {
		EXPECT_EQ(crossSequence(12, m), want) << crossMethodName(m);
		EXPECT_EQ(parseCrossMethod(crossMethodName(m)), m);
	}
	auto a = crossSequence(30, CrossMethod::Greedy);
	EXPECT_EQ(crossSequence(30, CrossMethod::Reinterpret), a);
	EXPECT_EQ(crossSequence(30, CrossMethod::DictIndex15), a);
	EXPECT_EQ(crossSequence(30, CrossMethod::HalfA261691), a);
}

TEST(Stanley, Conjecture)
{
	auto rep = verifyConjecture(8, 20);
	EXPECT_EQ(rep.layers.size(), 9u);
	EXPECT_TRUE(rep.allAgree());
	EXPECT_EQ(rep.layers[8].greedy[0], 193u);
	EXPECT_EQ(prefix(rep.layers[8].reinterpreted, 5), (std::vector<std::uint64_t>{193, 194, 196, 197, 202}));
}

TEST(Sequences, Terms)
{
	auto as64 = [](const std::vector<BigInt> &v) {
		std::vector<std::uint64_t> out;
		for (const auto &x : v)
			out.push_back(x.convert_to<std::uint64_t>());
		return out;
	};
	EXPECT_EQ(as64(sequenceTerms("a024629", 10)),
	          (std::vector<std::uint64_t>{0, 1, 2, 20, 21, 22, 210, 211, 212, 2100}));
	EXPECT_EQ(as64(sequenceTerms("a320035", 5)), (std::vector<std::uint64_t>{0, 3, 11, 25, 46}));
	EXPECT_EQ(as64(sequenceTerms("a244040", 6)), (std::vector<std::uint64_t>{0, 1, 2, 2, 3, 4}));
	EXPECT_EQ(as64(sequenceTerms("a323398", 5)), (std::vector<std::uint64_t>{2, 5, 6, 11, 14}));
	EXPECT_EQ(as64(sequenceTerms("a265316", 12, CrossMethod::HalfA261691)).back(), 214u);
	EXPECT_THROW(sequenceTerms("a000000", 3), std::invalid_argument);
	EXPECT_THROW(sequenceTerms("a024629", 3, CrossMethod::Greedy), std::invalid_argument);
	for (const auto &s : supportedSequences())
		EXPECT_EQ(sequenceTerms(s.id, 7).size(), 7u) << s.id;
}
