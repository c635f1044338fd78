#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "kspoly/error.hpp"

using namespace kspoly;
using kspoly::testing::polytope;
using kspoly::testing::reference_tables;

namespace {

PentadecagonLayout small_layout() {
    std::vector<Pentadecagon> p;
    const char* labels[] = {"A", "B", "C", "D"};
    for (int i = 0; i < 4; ++i) p.push_back({labels[i], 15 * i + 1, 15 * i + 15, 1.0, 0.0});
    return PentadecagonLayout(PolytopeId::Cell600, 4, p);
}

}  // namespace

TEST(Layout, WraparoundStaysInsidePentadecagon) {
    const auto layout = small_layout();
    EXPECT_EQ(layout.shift_ray(1, 1), 2);
    EXPECT_EQ(layout.shift_ray(15, 1), 1);
    EXPECT_EQ(layout.shift_ray(55, 7), 47);
    EXPECT_EQ(layout.shift_ray(56, 14), 55);
    EXPECT_EQ(layout.shift_ray(30, 15), 30);
    EXPECT_EQ(layout.pentadecagon_of(46), 3);
    EXPECT_THROW(layout.pentadecagon_of(0), DomainError);
    EXPECT_THROW(layout.pentadecagon_of(61), DomainError);
}

TEST(Layout, RejectsBadSpans) {
    std::vector<Pentadecagon> p{{"A", 1, 15, 1, 0}, {"B", 16, 29, 1, 0}, {"C", 30, 45, 1, 0}, {"D", 46, 60, 1, 0}};
    EXPECT_THROW(PentadecagonLayout(PolytopeId::Cell600, 4, p), InconsistentData);
    std::vector<Pentadecagon> q{{"A", 1, 15, 1, 0}, {"A", 16, 30, 1, 0}, {"C", 31, 45, 1, 0}, {"D", 46, 60, 1, 0}};
    EXPECT_THROW(PentadecagonLayout(PolytopeId::Cell600, 4, q), InconsistentData);
    std::vector<Pentadecagon> r{{"A", 1, 15, 1, 0}, {"B", 16, 30, 1, 0}, {"C", 31, 45, 1, 0}};
    EXPECT_THROW(PentadecagonLayout(PolytopeId::Cell600, 4, r), InconsistentData);
}

TEST(Layout, PolytopeNames) {
    for (auto id : {PolytopeId::Cell600, PolytopeId::Cell120, PolytopeId::Gosset421})
        EXPECT_EQ(parse_polytope(to_string(id)), id);
    EXPECT_THROW(parse_polytope("24cell"), ParseError);
}

TEST(Basis, SortsAndValidates) {
    EXPECT_EQ(Basis({56, 1, 55, 5}).rays(), (std::vector<RayId>{1, 5, 55, 56}));
    EXPECT_THROW(Basis({1, 1, 2, 3}), DomainError);
    EXPECT_THROW(Basis({0, 1, 2, 3}), DomainError);
}

TEST(Orbit, ExpandsWithWraparound) {
    const auto layout = small_layout();
    const Generator a{parse_letter("a"), Basis({1, 5, 55, 56})};
    EXPECT_EQ(expand_orbit(a, layout, 0), Basis({1, 5, 55, 56}));
    EXPECT_EQ(expand_orbit(a, layout, 4), Basis({5, 9, 59, 60}));
    EXPECT_EQ(expand_orbit(a, layout, 5), Basis({6, 10, 60, 46}));
    EXPECT_EQ(expand_orbit(a, layout, 15), expand_orbit(a, layout, 0));
    EXPECT_EQ(expand_orbit(a, layout, -1), expand_orbit(a, layout, 14));
}

TEST(BasisTable, Cell600MatchesFixtureColumns) {
    const auto& p = polytope(PolytopeId::Cell600);
    const auto& cols = reference_tables().cell600_columns;
    ASSERT_EQ(p.table.size(), 75u);
    ASSERT_EQ(cols.size(), 5u);
    std::size_t g = 0;
    for (const auto& [letter, rows] : cols) {
        ASSERT_EQ(rows.size(), 15u) << letter;
        EXPECT_EQ(p.table.generators()[g].label.text(), letter);
        for (std::size_t s = 0; s < 15; ++s) {
            EXPECT_EQ(p.table.basis(15 * g + s), Basis(rows[s])) << letter << " shift " << s;
            EXPECT_EQ(p.table.origin(15 * g + s).generator, g);
            EXPECT_EQ(p.table.origin(15 * g + s).shift, static_cast<int>(s));
        }
        ++g;
    }
}

TEST(BasisTable, ShapesAndUniformity) {
    for (auto id : {PolytopeId::Cell600, PolytopeId::Cell120, PolytopeId::Gosset421}) {
        const auto& p = polytope(id);
        const auto shape = expected_shape(id);
        EXPECT_EQ(p.table.size(), 15 * p.data.generators.size());
        std::vector<int> occ(static_cast<std::size_t>(shape.ray_count) + 1, 0);
        for (const auto& b : p.table.bases()) {
            EXPECT_EQ(static_cast<int>(b.size()), shape.dimension);
            for (RayId r : b.rays()) ++occ[static_cast<std::size_t>(r)];
        }
        for (int r = 1; r <= shape.ray_count; ++r) EXPECT_EQ(occ[static_cast<std::size_t>(r)], shape.bases_per_ray);
        std::set<Basis> distinct(p.table.bases().begin(), p.table.bases().end());
        EXPECT_EQ(distinct.size(), p.table.size());
    }
    EXPECT_EQ(polytope(PolytopeId::Cell120).table.size(), 675u);
    EXPECT_EQ(polytope(PolytopeId::Gosset421).table.size(), 2025u);
}

TEST(BasisTable, FindAndGeneratorLookup) {
    const auto& t = polytope(PolytopeId::Cell600).table;
    EXPECT_EQ(t.find(Basis({56, 55, 5, 1})), 0u);
    EXPECT_FALSE(t.find(Basis({1, 2, 3, 4})).has_value());
    EXPECT_EQ(t.generator_index(parse_letter("c")), 2u);
    EXPECT_THROW(t.generator_index(parse_letter("f")), DomainError);
}

TEST(BasisTable, RejectsDuplicateOrbits) {
    const auto layout = small_layout();
    std::vector<Generator> gens{{parse_letter("a"), Basis({1, 5, 55, 56})}, {parse_letter("b"), Basis({2, 6, 56, 57})}};
    EXPECT_THROW(build_basis_table(layout, gens), InconsistentData);
    gens[1].label = parse_letter("a");
    EXPECT_THROW(build_basis_table(layout, gens), DomainError);
    EXPECT_THROW(build_basis_table(layout, {}), DomainError);
    EXPECT_THROW(build_basis_table(layout, {{parse_letter("a"), Basis({1, 5, 55})}}), DomainError);
}

TEST(BasisTable, RejectsNonUniformOccurrence) {
    const auto layout = small_layout();
    std::vector<Generator> gens{{parse_letter("a"), Basis({1, 5, 55, 56})}, {parse_letter("b"), Basis({1, 16, 31, 46})}};
    EXPECT_THROW(build_basis_table(layout, gens), InconsistentData);
}

TEST(Profile, Cell600Columns) {
    const auto& p = polytope(PolytopeId::Cell600);
    EXPECT_EQ(basis_profile(p.table.basis(0), p.data.layout), "AADD");
    EXPECT_EQ(p.profile.rows(), 4);
    EXPECT_EQ(p.profile.cols(), 5);
    EXPECT_EQ(p.profile.column(0), (std::vector<int>{2, 0, 0, 2}));
    for (int j = 0; j < p.profile.cols(); ++j) {
        int sum = 0;
        for (int i = 0; i < p.profile.rows(); ++i) sum += p.profile.at(i, j);
        EXPECT_EQ(sum, 4);
    }
}

TEST(Profile, ShapesForLargerPolytopes) {
    EXPECT_EQ(polytope(PolytopeId::Cell120).profile.rows(), 20);
    EXPECT_EQ(polytope(PolytopeId::Cell120).profile.cols(), 45);
    EXPECT_EQ(polytope(PolytopeId::Gosset421).profile.rows(), 8);
    EXPECT_EQ(polytope(PolytopeId::Gosset421).profile.cols(), 135);
}

TEST(Symbol, RoundTripsText) {
    for (const char* s : {"150_2 30_4 - 105_4", "30_2 - 15_4", "225_2 30_4 15_6 15_8 - 195_4", "120_135 - 2025_8"}) {
        const auto sym = parse_symbol(s);
        EXPECT_EQ(sym.text(), s);
    }
    EXPECT_EQ(parse_symbol("150_2 30_4 - 105_4").total_rays(), 180);
    for (const char* bad : {"", "30_2", "30_2 -", "30_2 - 15", "x_2 - 15_4", "30_2 - 15_4 1_1"})
        EXPECT_THROW(parse_symbol(bad), ParseError) << bad;
}

TEST(Symbol, WholeSystems) {
    EXPECT_EQ(ray_basis_symbol(polytope(PolytopeId::Cell600).table.bases()).text(), "60_5 - 75_4");
    EXPECT_EQ(ray_basis_symbol(polytope(PolytopeId::Cell120).table.bases()).text(), "300_9 - 675_4");
    EXPECT_EQ(ray_basis_symbol(polytope(PolytopeId::Gosset421).table.bases()).text(), "120_135 - 2025_8");
}

TEST(Symbol, WorkedExample) {
    const auto id = PolytopeId::Cell120;
    const auto& p = polytope(id);
    const auto w = kspoly::testing::word(id, "abegkri'");
    EXPECT_EQ(pentadecagon_counts(w, p.data.generators, p.data.layout), "(B1B2D1D2E2H1I1I2K1K2)_2 (AL)_4");
    EXPECT_EQ(symbol_from_word(w, p.data.generators, p.data.layout).text(), "150_2 30_4 - 105_4");
    const auto idx = word_to_bases(w, p.table);
    EXPECT_EQ(idx.size(), 105u);
    EXPECT_TRUE(std::is_sorted(idx.begin(), idx.end()));
    EXPECT_EQ(ray_basis_symbol(p.table, idx).text(), "150_2 30_4 - 105_4");
}

TEST(Word, BindingChecksLetters) {
    const auto& g = polytope(PolytopeId::Cell600).data.generators;
    EXPECT_THROW(bind_word(parse_word("a f"), g, PolytopeId::Cell600), DomainError);
    EXPECT_EQ(bind_word(parse_word("a e"), g, PolytopeId::Cell600).polytope(), PolytopeId::Cell600);
    EXPECT_THROW(bind_word(parse_word("a", PolytopeId::Cell120), g, PolytopeId::Cell600), DomainError);
}
