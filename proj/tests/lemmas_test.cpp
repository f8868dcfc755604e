#include "threehalves/lemmas.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace threehalves;

// Reduced sizes; the acceptance binary runs the full ones.
TEST(Lemmas, SmallSuitesPass)
{
	SuiteParams small{std::nullopt, 20181103};
	const std::map<std::string_view, std::uint64_t> limits{
	    {"roundtrip", 2000}, {"confluence", 300},  {"injectivity", 8},  {"period", 3},        {"prefix", 2000},
	    {"leading", 2000},   {"up-up-down", 1000}, {"isomorphism", 7},  {"digit-sum", 1000},  {"increment", 2000},
	    {"exactness", 40},   {"script-cover", 6},  {"three-free", 4},   {"ap-digits", 1000},  {"greedy-layers", 2000},
	};
	for (const auto &s : lemmaSuites()) {
		ASSERT_TRUE(limits.count(s.name)) << s.name;
		small.limit = limits.at(s.name);
		SuiteResult r = s.run(small);
		EXPECT_TRUE(r.passed) << r.name << ": " << r.witness;
		EXPECT_GT(r.checked, 0u) << r.name;
	}
}

TEST(Lemmas, NamesAreUnique)
{
	std::set<std::string_view> names;
	for (const auto &s : lemmaSuites())
		EXPECT_TRUE(names.insert(s.name).second) << s.name;
}

TEST(Lemmas, Deterministic)
{
	auto a = lemmas::apDigits(200, 42), b = lemmas::apDigits(200, 42);
	EXPECT_EQ(a.checked, b.checked);
	EXPECT_EQ(a.passed, b.passed);
}
