#include <random>

#include <gtest/gtest.h>

#include "omega/rational.hpp"

namespace omega {
namespace {

TEST(RationalText, PrintsLowestTerms)
{
    EXPECT_EQ(to_text(Rational(3)), "3");
    EXPECT_EQ(to_text(Rational(-6, 4)), "-3/2");
    EXPECT_EQ(to_text(Rational(0, 5)), "0");
}

TEST(RationalText, Parses)
{
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
    EXPECT_EQ(parse_rational("+4/2"), Rational(2));
    EXPECT_EQ(parse_rational("123456789012345678901234567890"),
              Rational(Integer("123456789012345678901234567890")));
}

TEST(RationalText, RejectsMalformed)
{
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "a", "1/2/3", "--1", "1 "})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << '"' << bad << '"';
}

TEST(RationalText, RoundTrip)
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 99999);
    for (int k = 0; k < 500; ++k) {
        const Rational x(num(rng), den(rng));
        EXPECT_EQ(parse_rational(to_text(x)), x);
    }
}

TEST(PrimitiveIntegerVector, ClearsDenominatorsAndGcd)
{
    const auto v = primitive_integer_vector({Rational(1, 2), Rational(-3, 4), Rational(0)});
    EXPECT_EQ(v, (IntegerVector{2, -3, 0}));
    const auto w = primitive_integer_vector({Rational(6), Rational(-9)});
    EXPECT_EQ(w, (IntegerVector{2, -3}));
    const auto z = primitive_integer_vector({Rational(0), Rational(0)});
    EXPECT_EQ(z, (IntegerVector{0, 0}));
}

TEST(PrimitiveIntegerVector, KeepsDirection)
{
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    for (int k = 0; k < 200; ++k) {
        RationalVector v(5);
        for (auto& x : v)
            x = Rational(num(rng), den(rng));
        const auto p = primitive_integer_vector(v);
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0)
            ++lead;
        if (lead == v.size())
            continue;
        const Rational scale = Rational(p[lead]) / v[lead];
        EXPECT_GT(scale, 0);
        for (std::size_t c = 0; c < v.size(); ++c)
            EXPECT_EQ(Rational(p[c]), scale * v[c]);
    }
}

TEST(Dot, Basics)
{
    EXPECT_EQ(dot({Rational(1, 2), Rational(2)}, {Rational(4), Rational(-1, 2)}), Rational(1));
    EXPECT_THROW(dot({Rational(1)}, {}), std::invalid_argument);
}

} // namespace
} // namespace omega
