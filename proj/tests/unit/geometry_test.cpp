#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "kspoly/error.hpp"
#include "kspoly/geometry.hpp"
#include "kspoly/rigidity.hpp"
#include "oracles.hpp"

using namespace kspoly;
using namespace kspoly::testing;

namespace {

template <class RS>
void expect_canonical(const RS& rs) {
    EXPECT_TRUE(std::is_sorted(rs.vectors.begin(), rs.vectors.end()));
    EXPECT_EQ(std::adjacent_find(rs.vectors.begin(), rs.vectors.end()), rs.vectors.end());
    for (const auto& v : rs.vectors) EXPECT_EQ(leading_sign(v), 1);
}

IntRaySet textbook_e8_rays() {
    std::vector<IntVector8> roots;
    for (const auto& r : textbook_e8_roots()) {
        IntVector8 v;
        for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
        roots.push_back(v);
    }
    return merge_antipodes(PolytopeId::Gosset421, roots);
}

}  // namespace

TEST(Group, EvenSignedPermutations) {
    const auto g = even_signed_permutations();
    EXPECT_EQ(g.size(), 192u);
    std::set<std::pair<std::array<int, 4>, std::array<int, 4>>> distinct;
    for (const auto& e : g) {
        distinct.insert({e.perm, e.sign});
        auto p = e.perm;
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
        EXPECT_EQ(inversions % 2, 0);
    }
    EXPECT_EQ(distinct.size(), 192u);
}

TEST(Icosian, VertexOrbits) {
    const auto g = even_signed_permutations();
    const GoldenInt a = GoldenInt::alpha(), b = GoldenInt::beta();
    EXPECT_EQ(orbit({GoldenInt(2), GoldenInt(), GoldenInt(), GoldenInt()}, g).size(), 8u);
    EXPECT_EQ(orbit({GoldenInt(1), GoldenInt(1), GoldenInt(1), GoldenInt(1)}, g).size(), 16u);
    EXPECT_EQ(orbit({GoldenInt(), a, GoldenInt(1), b}, g).size(), 96u);
    const auto v = icosian_600cell_vertices();
    ASSERT_EQ(v.size(), 120u);
    for (const auto& x : v) {
        EXPECT_EQ(inner_product(x, x), GoldenInt(4));
        EXPECT_TRUE(std::binary_search(v.begin(), v.end(), negate(x)));
    }
}

TEST(Icosian, OrthogonalityStructure) {
    const auto rs = icosian_600cell();
    ASSERT_EQ(rs.size(), 60u);
    expect_canonical(rs);
    const auto g = orthogonality_graph(rs);
    EXPECT_EQ(g.edge_count(), 450u);
    for (std::size_t v = 0; v < 60; ++v) EXPECT_EQ(g.degree(v), 15u);
    const auto bases = enumerate_bases(g, 4);
    EXPECT_EQ(bases.size(), 75u);
    EXPECT_TRUE(std::is_sorted(bases.begin(), bases.end()));
    for (int c : ray_occurrences(bases, 60)) EXPECT_EQ(c, 5);
    EXPECT_TRUE(is_saturated(g, bases));
    const auto oracle = nested_clique_count(60, 4, [&](std::size_t u, std::size_t v) {
        return inner_product(rs.vectors[u], rs.vectors[v]).is_zero();
    });
    EXPECT_EQ(oracle, 75u);
    for (const auto& b : bases)
        for (RayId x : b.rays())
            for (RayId y : b.rays())
                if (x < y) EXPECT_TRUE(inner_product(rs.vectors[static_cast<std::size_t>(x - 1)], rs.vectors[static_cast<std::size_t>(y - 1)]).is_zero());
}

TEST(E8, PhiImageIsARootSystem) {
    const auto roots = e8_roots();
    ASSERT_EQ(roots.size(), 240u);
    std::set<IntVector8> set(roots.begin(), roots.end());
    EXPECT_EQ(set.size(), 240u);
    std::map<std::int64_t, int> products;
    for (const auto& r : roots) EXPECT_EQ(inner_product(r, r), 4);
    for (const auto& r : roots) {
        for (const auto& s : roots) {
            const auto ip = inner_product(r, s);
            if (&r == &roots.front()) ++products[ip];
            IntVector8 refl;
            for (std::size_t i = 0; i < 8; ++i) refl[i] = s[i] - (2 * ip / 4) * r[i];
            ASSERT_EQ(ip % 2, 0);
            EXPECT_TRUE(set.count(refl));
        }
    }
    EXPECT_EQ(products, (std::map<std::int64_t, int>{{-4, 1}, {-2, 56}, {0, 126}, {2, 56}, {4, 1}}));
}

TEST(E8, RaysAndBases) {
    const auto rs = e8_rays();
    ASSERT_EQ(rs.size(), 120u);
    expect_canonical(rs);
    const auto g = orthogonality_graph(rs);
    EXPECT_EQ(g.edge_count(), 3780u);
    for (std::size_t v = 0; v < 120; ++v) EXPECT_EQ(g.degree(v), 63u);
    const auto bases = enumerate_bases(g, 8);
    EXPECT_EQ(bases.size(), 2025u);
    for (int c : ray_occurrences(bases, 120)) EXPECT_EQ(c, 135);
    EXPECT_TRUE(is_saturated(g, bases));
}

TEST(E8, TextbookRootsGiveTheSameCounts) {
    const auto rs = textbook_e8_rays();
    ASSERT_EQ(rs.size(), 120u);
    const auto g = orthogonality_graph(rs);
    EXPECT_EQ(g.edge_count(), 3780u);
    EXPECT_EQ(enumerate_bases(g, 8).size(), 2025u);
}

TEST(Cell120, RaysAndBases) {
    const auto v = cell120_vertices();
    ASSERT_EQ(v.size(), 600u);
    std::set<GoldenVector4> distinct(v.begin(), v.end());
    EXPECT_EQ(distinct.size(), 600u);
    const GoldenInt norm = inner_product(v.front(), v.front());
    for (const auto& x : v) EXPECT_EQ(inner_product(x, x), norm);
    const auto rs = build_120cell_rays();
    ASSERT_EQ(rs.size(), 300u);
    expect_canonical(rs);
    const auto g = orthogonality_graph(rs);
    EXPECT_EQ(g.edge_count(), 4050u);
    const auto bases = enumerate_bases(g, 4);
    EXPECT_EQ(bases.size(), 675u);
    for (int c : ray_occurrences(bases, 300)) EXPECT_EQ(c, 9);
    EXPECT_TRUE(is_saturated(g, bases));
}

TEST(Cell120, MirrorDirections) {
    EXPECT_EQ(edge_directions(PolytopeId::Cell120, cell120_vertices()).size(), 60u);
    EXPECT_EQ(edge_directions(PolytopeId::Cell600, icosian_600cell_vertices()).size(), 60u);
}

TEST(Cell120, MalformedVertexData) {
    EXPECT_THROW(cell120_vertices_from_json("{"), ParseError);
    EXPECT_THROW(cell120_vertices_from_json(R"({"vertex_count":600,"orbits":[]})"), InconsistentData);
}

TEST(Antipodes, MissingPartnerIsRejected) {
    const auto v = icosian_600cell_vertices();
    std::vector<GoldenVector4> broken(v.begin() + 1, v.end());
    EXPECT_THROW(merge_antipodes(PolytopeId::Cell600, broken), InconsistentData);
    EXPECT_THROW(merge_antipodes(PolytopeId::Cell600, std::vector<GoldenVector4>{GoldenVector4{}}), InconsistentData);
}

TEST(Antipodes, ScaleByAlphaKeepsCanonicalSigns) {
    const auto rs = scale_by_alpha(icosian_600cell());
    ASSERT_EQ(rs.size(), 60u);
    expect_canonical(rs);
}

TEST(Cliques, SmallGraphs) {
    OrthoGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 2);
    g.add_edge(1, 0);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_EQ(enumerate_bases(g, 3), (std::vector<Basis>{Basis({1, 2, 3})}));
    EXPECT_EQ(enumerate_bases(g, 2).size(), 4u);
    EXPECT_TRUE(enumerate_bases(g, 4).empty());
    EXPECT_FALSE(is_saturated(g, enumerate_bases(g, 3)));
    EXPECT_THROW(g.add_edge(0, 5), DomainError);
}

TEST(Phi, PreservesEveryOrthogonality) {
    const auto r = check_phi_orthogonality();
    EXPECT_EQ(r.pairs, 1770u);
    EXPECT_EQ(r.h4_orthogonal, 450u);
    EXPECT_EQ(r.preserved, 450u);
    EXPECT_GT(r.gained, 0u);
    ASSERT_TRUE(r.gained_witness.has_value());
}

TEST(Rigidity, EveryClaimHolds) {
    const auto r = rigidity_demo();
    EXPECT_TRUE(r.all_pass());
    for (const auto& c : r.claims) EXPECT_TRUE(c.pass()) << c.description;
    const auto v16 = std::find_if(r.claims.begin(), r.claims.end(),
                                  [](const RigidityClaim& c) { return c.description == "<v1,v6> = 0"; });
    ASSERT_NE(v16, r.claims.end());
    EXPECT_FALSE(v16->observed);
    EXPECT_EQ(inner_product(r.images[0], r.images[5]), 0);
}

TEST(Export, RaySetJson) {
    const auto j = nlohmann::json::parse(ray_set_json(icosian_600cell()));
    EXPECT_EQ(j["polytope"], "600cell");
    EXPECT_EQ(j["ray_count"], 60);
    EXPECT_EQ(j["rays"].size(), 60u);
    EXPECT_EQ(j["rays"][0].size(), 4u);
    const auto e = nlohmann::json::parse(ray_set_json(e8_rays()));
    EXPECT_EQ(e["rays"][0].size(), 8u);
}
