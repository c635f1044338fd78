#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "kspoly/error.hpp"
#include "kspoly/golden.hpp"

using namespace kspoly;

namespace {

const double kAlpha = (1.0 - std::sqrt(5.0)) / 2.0;

}  // namespace

TEST(Golden, AlphaSatisfiesItsEquation) {
    const auto a = GoldenInt::alpha();
    EXPECT_EQ(a * a, a + GoldenInt(1));
    EXPECT_EQ(GoldenInt::beta(), GoldenInt(1) - a);
    EXPECT_EQ(GoldenInt::beta() * GoldenInt::beta(), GoldenInt::beta() + GoldenInt(1));
    EXPECT_EQ(a * GoldenInt::beta(), GoldenInt(-1));
    EXPECT_NEAR(a.value(), kAlpha, 1e-15);
}

TEST(Golden, MultiplicationMatchesFloatingPoint) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 500; ++i) {
        const GoldenInt x{d(rng), d(rng)}, y{d(rng), d(rng)};
        EXPECT_NEAR((x * y).value(), x.value() * y.value(), 1e-9);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x + y) * x, x * x + y * x);
    }
}

TEST(Golden, ExactSign) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> d(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        const GoldenInt x{d(rng), d(rng)};
        const double v = x.value();
        if (std::abs(v) > 1e-9) EXPECT_EQ(x.sign(), v > 0 ? 1 : -1) << x.text();
    }
    EXPECT_EQ(GoldenInt().sign(), 0);
    EXPECT_EQ(GoldenInt::alpha().sign(), -1);
    EXPECT_EQ(GoldenInt::beta().sign(), 1);
    // Consecutive Fibonacci numbers give values close to zero.
    EXPECT_EQ(GoldenInt(832040, 1346269).sign(), -1);
    EXPECT_EQ(GoldenInt(-832040, -1346269).sign(), 1);
    EXPECT_EQ(GoldenInt(1346269, 2178309).sign(), 1);
    const std::int64_t big = std::int64_t{1} << 62;
    EXPECT_EQ(GoldenInt(big, big).sign(), 1);
    EXPECT_EQ(GoldenInt(-big, big).sign(), -1);
}

TEST(Golden, OverflowIsReported) {
    const auto max = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(GoldenInt(max) + GoldenInt(1), OverflowError);
    EXPECT_THROW(GoldenInt(std::numeric_limits<std::int64_t>::min()) - GoldenInt(1), OverflowError);
    EXPECT_THROW(GoldenInt(0, std::int64_t{1} << 40) * GoldenInt(0, std::int64_t{1} << 40), OverflowError);
    EXPECT_THROW(-GoldenInt(std::numeric_limits<std::int64_t>::min()), OverflowError);
    EXPECT_THROW(inner_product(IntVector8{max, 0, 0, 0, 0, 0, 0, 0}, IntVector8{2, 0, 0, 0, 0, 0, 0, 0}), OverflowError);
}

TEST(Golden, Text) {
    EXPECT_EQ(GoldenInt(0).text(), "0");
    EXPECT_EQ(GoldenInt(3).text(), "3");
    EXPECT_EQ(GoldenInt(0, 1).text(), "a");
    EXPECT_EQ(GoldenInt(0, -1).text(), "-a");
    EXPECT_EQ(GoldenInt(1, -1).text(), "1-a");
    EXPECT_EQ(GoldenInt(1, -2).text(), "1-2a");
    EXPECT_EQ(GoldenInt(-2, 3).text(), "-2+3a");
    EXPECT_EQ(to_string(GoldenVector4{GoldenInt(2), GoldenInt(), GoldenInt::alpha(), GoldenInt::beta()}), "(2, 0, a, 1-a)");
}

TEST(Golden, VectorHelpers) {
    const GoldenVector4 v{GoldenInt(0), GoldenInt::alpha(), GoldenInt(1), GoldenInt::beta()};
    EXPECT_EQ(inner_product(v, v), GoldenInt(4));
    EXPECT_EQ(leading_sign(v), -1);
    EXPECT_EQ(leading_sign(negate(v)), 1);
    EXPECT_EQ(leading_sign(GoldenVector4{}), 0);
    EXPECT_EQ(scale(GoldenInt::alpha(), v)[2], GoldenInt::alpha());
    const auto r = to_real(v);
    EXPECT_NEAR(r[1], kAlpha, 1e-15);
    EXPECT_EQ(inner_product(IntVector8{1, 2, 3, 4, 5, 6, 7, 8}, IntVector8{1, 1, 1, 1, 1, 1, 1, 1}), 36);
    EXPECT_EQ(leading_sign(IntVector8{0, 0, -1, 0, 0, 0, 0, 0}), -1);
}
