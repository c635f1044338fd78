#include <gtest/gtest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "kspoly/error.hpp"
#include "oracles.hpp"

using namespace kspoly;
using namespace kspoly::testing;

namespace {

WeightDistribution code_distribution(PolytopeId id) {
    const auto& p = polytope(id);
    return macwilliams_transform(dual_weight_distribution(p.profile_mod2), p.profile_mod2.cols());
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace

TEST(Elimination, RankMatchesTextbookOracle) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t rows = 1 + seed % 9, cols = 1 + (seed * 7) % 23;
        const auto m = random_matrix(rows, cols, seed, seed % 3 == 0 ? 0.2 : 0.5);
        const auto bm = to_bitmatrix(m);
        EXPECT_EQ(static_cast<std::size_t>(gf2_rank(bm)), naive_rank(m)) << seed;
        const auto spec = gf2_nullspace(bm);
        EXPECT_EQ(spec.n, cols);
        EXPECT_EQ(spec.k, cols - naive_rank(m));
        for (const auto& v : spec.nullspace_basis) EXPECT_FALSE(bm.multiply(v).any());
        // The basis is independent.
        EXPECT_EQ(static_cast<std::size_t>(gf2_rank(BitMatrix::from_rows(cols, spec.nullspace_basis))), spec.k);
    }
}

TEST(Elimination, EchelonIsReduced) {
    const auto bm = to_bitmatrix(random_matrix(8, 16, 99));
    const auto e = gf2_echelon(bm);
    ASSERT_EQ(e.rows.size(), e.pivots.size());
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (i) EXPECT_LT(e.pivots[i - 1], e.pivots[i]);
        for (std::size_t j = 0; j < e.rows.size(); ++j) EXPECT_EQ(e.rows[j].test(e.pivots[i]), i == j);
    }
}

TEST(Elimination, PolytopeNullities) {
    EXPECT_EQ(polytope(PolytopeId::Cell600).code.k, 4u);
    EXPECT_EQ(polytope(PolytopeId::Cell120).code.k, 30u);
    EXPECT_EQ(polytope(PolytopeId::Gosset421).code.k, 131u);
    EXPECT_EQ(polytope(PolytopeId::Cell600).code.k, 5 - naive_rank(profile_dense(polytope(PolytopeId::Cell600).profile)));
    EXPECT_EQ(polytope(PolytopeId::Cell120).code.k, 45 - naive_rank(profile_dense(polytope(PolytopeId::Cell120).profile)));
}

TEST(Krawtchouk, RecurrenceMatchesBinomialSum) {
    for (std::size_t n : {1u, 2u, 7u, 20u, 45u, 135u}) {
        for (std::size_t x = 0; x <= n; x += (n > 40 ? 11 : 1)) {
            const auto row = krawtchouk_row(x, n);
            ASSERT_EQ(row.size(), n + 1);
            for (std::size_t w = 0; w <= n; ++w) EXPECT_EQ(row[w], binomial_krawtchouk(w, x, n)) << n << " " << x << " " << w;
        }
    }
}

TEST(MacWilliams, DualEnumerationMatchesBruteForce) {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const auto m = random_matrix(6, 14, seed);
        const auto dual = dual_weight_distribution(to_bitmatrix(m));
        const auto expect = brute_force_dual_weights(m, 14);
        for (std::size_t w = 0; w <= 14; ++w) EXPECT_EQ(dual.at(w), expect[w]);
    }
}

TEST(MacWilliams, TransformMatchesDirectEnumeration) {
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
        const std::size_t n = 8 + seed % 9;
        const auto m = random_matrix(1 + seed % 7, n, seed);
        const auto w = macwilliams_transform(dual_weight_distribution(to_bitmatrix(m)), n);
        const auto expect = brute_force_code_weights(m, n);
        for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(w.at(i), expect[i]) << seed << " weight " << i;
    }
}

TEST(MacWilliams, RejectsInconsistentInput) {
    EXPECT_THROW(macwilliams_transform(WeightDistribution({1, 1, 1}), 2), InconsistentData);
    EXPECT_THROW(macwilliams_transform(WeightDistribution({1, 3}), 1), InconsistentData);
    EXPECT_THROW(dual_weight_distribution(to_bitmatrix(random_matrix(12, 30, 5)), 8), BudgetExceeded);
}

TEST(MacWilliams, Cell600) {
    const auto w = code_distribution(PolytopeId::Cell600);
    EXPECT_EQ(w.total(), 16);
    EXPECT_EQ(odd_weight_total(w), 8);
    const std::vector<int> brute = {1, 2, 0, 6, 0, 0};
    const auto oracle = brute_force_code_weights(profile_dense(polytope(PolytopeId::Cell600).profile), 5);
    for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(w.at(i), oracle[i]);
    EXPECT_EQ(w.at(1), brute[1]);
    EXPECT_EQ(w.at(3), brute[3]);
}

TEST(MacWilliams, Cell120MatchesFixtureCounts) {
    const auto w = code_distribution(PolytopeId::Cell120);
    const auto& ref = reference_tables().cell120_odd_counts;
    ASSERT_EQ(ref.size(), 20u);
    for (std::size_t k = 1; k <= 45; k += 2) {
        const auto it = ref.find(k);
        EXPECT_EQ(w.at(k), it == ref.end() ? BigInt(0) : it->second) << "weight " << k;
    }
    EXPECT_EQ(w.at(1), 4);
    EXPECT_EQ(w.at(3), 48);
    EXPECT_EQ(w.at(5), 564);
    EXPECT_EQ(w.at(7), 5116);
    EXPECT_EQ(w.at(9), 42576);
    EXPECT_EQ(w.at(23), 127058600);
    EXPECT_EQ(w.at(39), 1212);
    EXPECT_EQ(odd_weight_total(w), pow2(29));
    EXPECT_EQ(w.total(), pow2(30));
}

TEST(MacWilliams, GossetMatchesFixtureCounts) {
    const auto w = code_distribution(PolytopeId::Gosset421);
    const auto& ref = reference_tables().gosset_odd_counts;
    ASSERT_EQ(ref.size(), 67u);
    for (std::size_t k = 1; k <= 135; k += 2) {
        const auto it = ref.find(k);
        EXPECT_EQ(w.at(k), it == ref.end() ? BigInt(0) : it->second) << "weight " << k;
    }
    EXPECT_EQ(w.at(1), 16);
    EXPECT_EQ(w.at(3), 25812);
    EXPECT_EQ(w.at(5), 21653868);
    EXPECT_EQ(w.at(133), 540);
    EXPECT_EQ(odd_weight_total(w), pow2(130));
}

TEST(MacWilliams, CodeAndDualAreMutualTransforms) {
    const auto& m = polytope(PolytopeId::Cell120).profile_mod2;
    const auto dual = dual_weight_distribution(m);
    const auto code = macwilliams_transform(dual, 45);
    EXPECT_EQ(macwilliams_transform(code, 45), dual);
}

TEST(Minimality, Bounds) {
    EXPECT_EQ(minimality_bound(45, 30), 16u);
    EXPECT_EQ(minimality_bound(135, 131), 5u);
    EXPECT_EQ(minimality_bound(5, 4), 2u);
}

TEST(Minimality, AgreesWithRestrictedNullityOracle) {
    for (auto id : {PolytopeId::Cell120, PolytopeId::Gosset421}) {
        const auto& p = polytope(id);
        const auto dense = profile_dense(p.profile);
        CodewordEnumerator e(p.code, id == PolytopeId::Cell120 ? 7 : 5, Parity::Odd);
        std::size_t checked = 0;
        while (auto v = e.next()) {
            const bool oracle = restricted_nullity(dense, v->support()) == 1;
            EXPECT_EQ(is_minimal_support(p.profile_mod2, *v), oracle);
            if (++checked == 3000) break;
        }
        EXPECT_EQ(checked, 3000u);
    }
}

TEST(Minimality, RejectsNonCodewords) {
    const auto& p = polytope(PolytopeId::Cell600);
    BitVector v(5);
    v.set(0);
    v.set(1);
    EXPECT_THROW(is_minimal_support(p.profile_mod2, v), DomainError);
    BitVector c(5);
    c.set(2);
    EXPECT_THROW(is_minimal_support(p.profile_mod2, c), DomainError);
    BitVector wrong(6);
    EXPECT_THROW(is_minimal_support(p.profile_mod2, wrong), DomainError);
}

TEST(Words, NullspaceMembership) {
    const auto& p = polytope(PolytopeId::Cell600);
    const auto& g = p.data.generators;
    for (const char* w : {"a", "b", "a c d", "a c e", "a d e", "b c d", "b c e", "b d e", "a b", "c d"})
        EXPECT_TRUE(is_nullspace_word(parse_word(w), p.profile, g)) << w;
    for (const char* w : {"c", "a c", "a b c", "c d e", "a b c d e"})
        EXPECT_FALSE(is_nullspace_word(parse_word(w), p.profile, g)) << w;
    EXPECT_TRUE(is_minimal_word(parse_word("a"), p.profile, g));
    EXPECT_FALSE(is_minimal_word(parse_word("a c d"), p.profile, g));
}

TEST(Words, ListedGossetWordsMostlyInNullspace) {
    const auto& p = polytope(PolytopeId::Gosset421);
    std::vector<BitVector> members;
    std::set<std::string> outside;
    for (const auto& text : reference_tables().gosset_independent_words) {
        const auto w = word(PolytopeId::Gosset421, text);
        if (is_nullspace_word(w, p.profile, p.data.generators)) members.push_back(word_to_vector(w, p.data.generators));
        else outside.insert(render_word(w));
    }
    // Two listed words leave a nonzero syndrome.
    EXPECT_EQ(outside, (std::set<std::string>{"a1 c1 w1", "a1 c1 w2"}));
    EXPECT_EQ(members.size(), 129u);
    EXPECT_EQ(gf2_rank(BitMatrix::from_rows(p.code.n, members)), 129);
}

TEST(Words, VectorRoundTrip) {
    const auto& g = polytope(PolytopeId::Cell120).data.generators;
    const auto w = word(PolytopeId::Cell120, "abegkri'");
    const auto v = word_to_vector(w, g);
    EXPECT_EQ(v.weight(), 7u);
    EXPECT_EQ(vector_to_word(v, g, PolytopeId::Cell120), w);
}

TEST(Output, CsvAndJson) {
    const WeightDistribution d({1, 2, 0, 6, 0, 7});
    EXPECT_EQ(weight_distribution_csv(d, false), "weight,count\n0,1\n1,2\n3,6\n5,7\n");
    EXPECT_EQ(weight_distribution_csv(d, true), "weight,count\n1,2\n3,6\n5,7\n");
    const auto j = nlohmann::json::parse(weight_distribution_json(d, true));
    EXPECT_EQ(j["length"], 5);
    EXPECT_EQ(j["odd_only"], true);
    EXPECT_EQ(j["total"], "15");
    ASSERT_EQ(j["counts"].size(), 3u);
    EXPECT_EQ(j["counts"][1]["weight"], 3);
    EXPECT_EQ(j["counts"][1]["count"], "6");
}
