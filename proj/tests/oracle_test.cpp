#include "surreal/oracle.hpp"
#include "surreal/separation.hpp"

#include <gtest/gtest.h>

using namespace surreal;
using namespace surreal::oracle;

namespace {

FlatSeq flat(std::string_view text) {
    FlatSeq out;
    for (char c : text)
        out.push_back(c == '+' ? Sign::plus : Sign::minus);
    return out;
}

} // namespace

TEST(Oracle, Enumerate) {
    EXPECT_EQ(enumerate_surreals(0), (std::vector<FlatSeq>{{}}));
    EXPECT_EQ(enumerate_surreals(1), (std::vector<FlatSeq>{{}, flat("-"), flat("+")}));
    EXPECT_EQ(enumerate_surreals(5).size(), 63U);
    const auto two = enumerate_surreals(2);
    EXPECT_EQ(two[3], flat("--"));
    EXPECT_EQ(two[6], flat("++"));
}

TEST(Oracle, NaiveCompare) {
    EXPECT_TRUE(naive_compare(flat("-"), flat("+")) < 0);
    EXPECT_TRUE(naive_compare(flat("+"), flat("++")) < 0);
    EXPECT_TRUE(naive_compare(flat("+-"), flat("+")) < 0);
    EXPECT_TRUE(naive_compare(flat("+-"), flat("+-")) == 0);
}

TEST(Oracle, NaiveSupStar) {
    EXPECT_EQ(naive_sup_star({}), FlatSeq{});
    EXPECT_EQ(naive_sup_star({flat("-"), flat("+")}), flat("++"));
    EXPECT_EQ(naive_sup_star({flat("+-")}), flat("+-+"));
}

TEST(Oracle, BruteMinSeparator) {
    EXPECT_EQ(brute_min_separator({flat("-")}, {flat("+")}, 3), FlatSeq{});
    EXPECT_EQ(brute_min_separator({flat("+")}, {flat("++")}, 4), flat("++-"));
    // Recorded from the exhaustive scan: nothing of length <= 2 fits
    // between "--" and "-".
    EXPECT_EQ(brute_min_separator({flat("--")}, {flat("-")}, 4), flat("--+"));
    EXPECT_THROW(brute_min_separator({flat("--")}, {flat("-")}, 2), none_found_error);
    EXPECT_THROW(brute_min_separator({flat("+")}, {flat("-")}, 4), not_separated_error);
}

TEST(Oracle, BruteAgreesWithConstructionsOnSmallExample) {
    const SurrealSet s{{parse_surreal("--")}, {}};
    const SurrealSet t{{parse_surreal("-")}, {}};
    EXPECT_EQ(shortest_separator(s, t), to_signseq(flat("--+")));
    EXPECT_EQ(shortest_separator_via_sep(s, t), to_signseq(flat("--+")));
}

TEST(Oracle, StabilizationProbe) {
    const ChainSpec omega_chain{SignSeq{}, Sign::plus};
    EXPECT_EQ(stabilization_probe(omega_chain, Ordinal{3}), SignQuery::plus);
    EXPECT_EQ(stabilization_probe(omega_chain, Ordinal::omega()), SignQuery::undefined);
    EXPECT_EQ(stabilization_probe(ChainSpec{parse_surreal("-"), Sign::plus}, Ordinal{0}),
              SignQuery::minus);
    EXPECT_THROW(stabilization_probe(ChainSpec{SignSeq{}, Sign::minus}, Ordinal{0}),
                 std::invalid_argument);
}

TEST(Oracle, CompareMatchesNaiveOnAllShortPairs) {
    const auto all = enumerate_surreals(5);
    std::vector<SignSeq> encoded;
    for (const auto& f : all)
        encoded.push_back(to_signseq(f));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            ASSERT_EQ(compare(encoded[i], encoded[j]), naive_compare(all[i], all[j]))
                << to_string(all[i]) << " vs " << to_string(all[j]);
}

TEST(Oracle, FlatConversion) {
    EXPECT_EQ(to_flat(parse_surreal("+^3 -")), flat("+++-"));
    EXPECT_THROW(to_flat(parse_surreal("+^w")), std::invalid_argument);
    EXPECT_EQ(to_string(flat("")), "0");
}
