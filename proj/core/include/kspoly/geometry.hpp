#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kspoly/bitmatrix.hpp"
#include "kspoly/golden.hpp"
#include "kspoly/layout.hpp"
#include "kspoly/raysystem.hpp"

namespace kspoly {

/// One representative vector per antipodal pair (leading coordinate positive),
/// sorted lexicographically. Ray i of the set carries id i + 1.
template <class Vector>
struct RaySet {
    PolytopeId polytope;
    std::vector<Vector> vectors;

    std::size_t size() const { return vectors.size(); }
};

using GoldenRaySet = RaySet<GoldenVector4>;
using IntRaySet = RaySet<IntVector8>;

/// Element of the group generated by even coordinate permutations and sign changes:
/// (g v)_i = sign[i] * v[perm[i]].
struct SignedPermutation {
    std::array<int, 4> perm;
    std::array<int, 4> sign;

    GoldenVector4 apply(const GoldenVector4& v) const;
};

/// All 12 * 16 = 192 elements.
std::vector<SignedPermutation> even_signed_permutations();

/// Images of v under every group element, deduplicated and sorted.
std::vector<GoldenVector4> orbit(const GoldenVector4& v, const std::vector<SignedPermutation>& group);

/// The 120 vertices: orbits of (2,0,0,0), (1,1,1,1) and (0, alpha, 1, beta).
std::vector<GoldenVector4> icosian_600cell_vertices();
/// The 60 rays of the icosian 600-cell. Throws InconsistentData if the orbit sizes do not total 120.
GoldenRaySet icosian_600cell();

/// Merges antipodal pairs; throws InconsistentData if some vector lacks its negative.
GoldenRaySet merge_antipodes(PolytopeId polytope, const std::vector<GoldenVector4>& vectors);
IntRaySet merge_antipodes(PolytopeId polytope, const std::vector<IntVector8>& vectors);

/// Multiplies every coordinate by alpha (the second, scaled 600-cell).
GoldenRaySet scale_by_alpha(const GoldenRaySet& rs);

/// (m1 + n1 a, ..., m4 + n4 a) -> (m1, m2, m3, m4, n1, n2, n3, n4).
IntVector8 phi_map(const GoldenVector4& v);

/// phi applied to both 600-cells and their negatives: 240 vectors. Throws on a wrong count.
std::vector<IntVector8> e8_roots();
/// The 120 rays of Gosset's polytope.
IntRaySet e8_rays();

/// 600 vertices from the standard 120-cell coordinates (core/data/cell120_vertices.json).
std::vector<GoldenVector4> cell120_vertices();
std::vector<GoldenVector4> cell120_vertices_from_json(std::string_view json_text);
/// 300 rays; throws InconsistentData when the vertex data does not give 600 distinct vertices.
GoldenRaySet build_120cell_rays();

/// Directions of the shortest nonzero vertex differences, one per antipodal pair.
/// For a regular polytope these are the mirror normals of its symmetry group.
GoldenRaySet edge_directions(PolytopeId polytope, const std::vector<GoldenVector4>& vertices);

/// Kochen-Specker diagram: vertices are rays, edges join orthogonal pairs.
class OrthoGraph {
public:
    explicit OrthoGraph(std::size_t vertex_count);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::array<std::size_t, 2>>& edges() const { return edges_; }
    const BitVector& neighbors(std::size_t v) const { return adjacency_[v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
    std::size_t degree(std::size_t v) const { return adjacency_[v].weight(); }

    /// Ignores loops and repeated edges.
    void add_edge(std::size_t u, std::size_t v);

private:
    std::vector<BitVector> adjacency_;
    std::vector<std::array<std::size_t, 2>> edges_;
};

/// Exact decisions only: golden inner products vanish iff both components vanish.
OrthoGraph orthogonality_graph(const GoldenRaySet& rs);
OrthoGraph orthogonality_graph(const IntRaySet& rs);

/// All d-cliques, each once, as bases of 1-based ray ids, in lexicographic order.
std::vector<Basis> enumerate_bases(const OrthoGraph& g, int d);

/// Number of bases each ray belongs to (index 0 is ray 1).
std::vector<int> ray_occurrences(const std::vector<Basis>& bases, std::size_t ray_count);

/// True iff every edge of g lies inside at least one of the bases.
bool is_saturated(const OrthoGraph& g, const std::vector<Basis>& bases);

/// {"polytope","rays":[...]}: golden coordinates as [m, n] pairs, 8-vectors as plain arrays.
std::string ray_set_json(const GoldenRaySet& rs);
std::string ray_set_json(const IntRaySet& rs);

}  // namespace kspoly
