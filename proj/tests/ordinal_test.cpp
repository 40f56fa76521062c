#include "surreal/ordinal.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace surreal;
using surreal::testing::random_ordinal;
using surreal::testing::Rng;

namespace {

Ordinal ord(std::string_view text) { return parse_ordinal(text); }

const Ordinal w = Ordinal::omega();

} // namespace

TEST(Ordinal, CompareExamples) {
    EXPECT_GT(ord("w^2"), ord("w*5+4"));
    EXPECT_EQ(Ordinal{0} <=> Ordinal{0}, std::strong_ordering::equal);
    EXPECT_LT(ord("w+3"), ord("w*2"));
    EXPECT_LT(Ordinal{7}, w);
    EXPECT_LT(ord("w^w"), ord("w^(w+1)"));
}

TEST(Ordinal, AddExamples) {
    EXPECT_EQ(Ordinal{3} + w, w);
    EXPECT_EQ(ord("w+1") + w, ord("w*2"));
    EXPECT_EQ(w + Ordinal{1}, ord("w+1"));
    EXPECT_EQ(ord("w^2+w*3+5") + ord("w*2+1"), ord("w^2+w*5+1"));
    EXPECT_EQ(ord("w*3") + ord("w^2"), ord("w^2"));
    EXPECT_EQ(Ordinal{} + Ordinal{}, Ordinal{});
}

TEST(Ordinal, LeftSubtractExamples) {
    EXPECT_EQ(left_subtract(w, ord("w+3")), Ordinal{3});
    EXPECT_EQ(left_subtract(Ordinal{2}, w), w);
    EXPECT_EQ(left_subtract(ord("w*2"), ord("w*2")), Ordinal{});
    EXPECT_EQ(left_subtract(ord("w*2+1"), ord("w*5")), ord("w*3"));
    EXPECT_THROW(left_subtract(ord("w+1"), w), underflow_error);
}

TEST(Ordinal, Classify) {
    EXPECT_EQ(classify(Ordinal{}), OrdinalKind::limit);
    EXPECT_EQ(classify(ord("w+5")), OrdinalKind::successor);
    EXPECT_EQ(classify(ord("w*2")), OrdinalKind::limit);
    EXPECT_EQ(predecessor(ord("w+5")), ord("w+4"));
    EXPECT_EQ(predecessor(Ordinal{1}), Ordinal{});
    EXPECT_THROW(predecessor(w), std::invalid_argument);
}

TEST(Ordinal, ParseAndFormat) {
    const auto a = ord("w^2*3+w+4");
    ASSERT_EQ(a.terms().size(), 3U);
    EXPECT_EQ(a.terms()[0].exponent, Ordinal{2});
    EXPECT_EQ(a.terms()[0].coefficient, 3U);
    EXPECT_EQ(to_string(a), "w^2*3+w+4");
    EXPECT_EQ(ord("w+w^2"), ord("w^2"));
    EXPECT_EQ(ord("0"), Ordinal{});
    EXPECT_EQ(to_string(Ordinal{}), "0");
    EXPECT_EQ(to_string(ord("w^1")), "w");
    EXPECT_EQ(to_string(ord("w^(w+1)*2")), "w^(w+1)*2");
    EXPECT_EQ(to_string(ord("w^w")), "w^w");
    EXPECT_EQ(to_string(ord("3+4")), "7");
}

TEST(Ordinal, ParseErrorsCarryPosition) {
    for (const auto* bad : {"", "w^", "w+", "01", "w*0", "x", "w^(w", "3 4", "w+0"}) {
        EXPECT_THROW(parse_ordinal(bad), syntax_error) << bad;
    }
    try {
        parse_ordinal("w+x");
        FAIL();
    } catch (const syntax_error& e) {
        EXPECT_EQ(e.position(), 1U);
    }
}

TEST(Ordinal, FromTermsRejectsNonCanonical) {
    EXPECT_THROW(Ordinal::from_terms({CnfTerm{Ordinal{1}, 1}, CnfTerm{Ordinal{2}, 1}}),
                 std::invalid_argument);
    EXPECT_THROW(Ordinal::from_terms({CnfTerm{Ordinal{1}, 0}}), std::invalid_argument);
}

TEST(OrdinalProperties, OrderIsTotal) {
    Rng rng(11);
    for (int i = 0; i < 3000; ++i) {
        const auto a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
        const int n = (a < b) + (a == b) + (a > b);
        ASSERT_EQ(n, 1);
        if (a < b && b < c) {
            ASSERT_LT(a, c);
        }
        if (a == b) {
            ASSERT_EQ(to_string(a), to_string(b));
        }
    }
}

TEST(OrdinalProperties, AdditionLaws) {
    Rng rng(12);
    for (int i = 0; i < 3000; ++i) {
        const auto a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
        ASSERT_EQ((a + b) + c, a + (b + c)) << a << " " << b << " " << c;
        ASSERT_LE(a, a + b);
        ASSERT_LE(b, a + b);
        ASSERT_EQ(a + Ordinal{}, a);
        ASSERT_EQ(Ordinal{} + a, a);
    }
}

TEST(OrdinalProperties, LeftSubtractionInvertsAddition) {
    Rng rng(13);
    for (int i = 0; i < 3000; ++i) {
        auto a = random_ordinal(rng), b = random_ordinal(rng);
        if (a > b)
            std::swap(a, b);
        ASSERT_EQ(a + left_subtract(a, b), b) << a << " " << b;
        const auto c = random_ordinal(rng);
        ASSERT_EQ(left_subtract(a, a + c), c);
    }
}

TEST(OrdinalProperties, FormatRoundTrip) {
    Rng rng(14);
    for (int i = 0; i < 3000; ++i) {
        const auto a = random_ordinal(rng);
        ASSERT_EQ(parse_ordinal(to_string(a)), a) << to_string(a);
    }
}
