#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "frob/poly_parser.hpp"

namespace frob {
namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

TEST(PolyParser, Literals) {
    EXPECT_EQ(parse_poly("0"), Poly());
    EXPECT_EQ(parse_poly("7"), Poly::constant(7));
    EXPECT_EQ(parse_poly("-3/6"), Poly::constant(q(-1, 2)));
    EXPECT_EQ(parse_poly("x"), Poly::identity());
    EXPECT_EQ(parse_poly("123456789012345678901234567890"),
              Poly::constant(Rational(BigInt("123456789012345678901234567890"))));
}

TEST(PolyParser, Expressions) {
    EXPECT_EQ(parse_poly("1 - x"), Poly({q(1), q(-1)}));
    EXPECT_EQ(parse_poly("(1-x)^2"), Poly({q(1), q(-2), q(1)}));
    EXPECT_EQ(parse_poly("x^3 - 2*x + 1/2"), Poly({q(1, 2), q(-2), q(0), q(1)}));
    EXPECT_EQ(parse_poly("6*x^2*(1-x)^2"), Poly({q(0), q(0), q(6), q(-12), q(6)}));
    EXPECT_EQ(parse_poly("x - x"), Poly());
    EXPECT_EQ(parse_poly("(x)^0"), Poly::constant(1));
    EXPECT_EQ(parse_poly(" \t2 *\n x "), Poly({q(0), q(2)}));
}

TEST(PolyParser, ExponentBindsTighterThanProduct) {
    EXPECT_EQ(parse_poly("2*x^2"), Poly({q(0), q(0), q(2)}));
    EXPECT_EQ(parse_poly("-1*x^2"), Poly({q(0), q(0), q(-1)}));
}

struct BadInput {
    std::string text;
    std::size_t offset;
};

class PolyParserErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(PolyParserErrors, ReportsOffset) {
    const BadInput& bad = GetParam();
    try {
        parse_poly(bad.text);
        FAIL() << "accepted '" << bad.text << "'";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.offset(), bad.offset) << bad.text;
        EXPECT_FALSE(e.expected().empty() && bad.text.find('^') == std::string::npos) << bad.text;
    }
}

INSTANTIATE_TEST_SUITE_P(Cases, PolyParserErrors,
                         ::testing::Values(BadInput{"", 0}, BadInput{"x +", 3}, BadInput{"(1 - x", 6},
                                           BadInput{"2x", 1}, BadInput{"x^", 2}, BadInput{"x^-1", 2},
                                           BadInput{"y", 0}, BadInput{"1/", 2}, BadInput{"x)", 1},
                                           BadInput{"x^5000", 2}, BadInput{"1.5", 1}, BadInput{"x ** 2", 3},
                                           BadInput{"x^2^3", 3}, BadInput{"-x", 1}));

TEST(PolyParser, ZeroDenominator) { EXPECT_THROW(parse_poly("x + 1/0"), DivideByZero); }

TEST(PolyParser, ExpectedSetNamesAlternatives) {
    try {
        parse_poly("(1 - x");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.expected(), std::vector<std::string>{"')'"});
        EXPECT_NE(std::string(e.what()).find("byte 6"), std::string::npos);
    }
}

TEST(PolyParserProperty, RoundTrip) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> deg(-1, 10);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
        for (auto& x : c) x = q(num(rng), den(rng));
        const Poly p(std::move(c));
        ASSERT_EQ(parse_poly(p.to_string()), p) << p.to_string();
    }
}

TEST(PolyParserProperty, PrintedForm) {
    EXPECT_EQ(Poly().to_string(), "0");
    EXPECT_EQ(parse_poly("1/2 - x + 2*x^3").to_string(), "1/2 - x + 2*x^3");
    EXPECT_EQ(parse_poly("-1*x^2").to_string(), "-1*x^2");
}

}  // namespace
}  // namespace frob
