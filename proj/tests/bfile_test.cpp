#include "threehalves/bfile.hpp"

#include <gtest/gtest.h>

using namespace threehalves;

TEST(BFile, RoundTrip)
{
	BFile b{3, {BigInt(5), BigInt(0), BigInt("123456789012345678901234567890")}};
	std::string text = toBFileText(b);
	EXPECT_EQ(text, "3 5\n4 0\n5 123456789012345678901234567890\n");
	EXPECT_EQ(parseBFile(text), b);
}

TEST(BFile, CommentsAndLineEndings)
{
	BFile b = parseBFile("# A024629\n\n0 0\r\n1 1\r\n  # trailing comment\n2 2\n");
	EXPECT_EQ(b.offset, 0);
	EXPECT_EQ(b.values, (std::vector<BigInt>{0, 1, 2}));
}

TEST(BFile, Errors)
{
	EXPECT_THROW(parseBFile("0 1\n2 3\n"), std::runtime_error);
	EXPECT_THROW(parseBFile("0 -1\n"), std::runtime_error);
	EXPECT_THROW(parseBFile("0\n"), std::runtime_error);
	EXPECT_THROW(parseBFile("x 1\n"), std::runtime_error);
	EXPECT_THROW(parseBFile("0 1 2\n"), std::runtime_error);
	try {
		parseBFile("0 1\n1 2\n5 3\n");
		FAIL();
	} catch (const std::runtime_error &e) {
		EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
	}
}

TEST(BFile, Empty)
{
	BFile b = parseBFile("# nothing\n");
	EXPECT_TRUE(b.values.empty());
}
