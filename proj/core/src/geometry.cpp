#include "kspoly/geometry.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "kspoly/dataset.hpp"
#include "kspoly/error.hpp"

namespace kspoly {

GoldenVector4 SignedPermutation::apply(const GoldenVector4& v) const {
    GoldenVector4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& c = v[static_cast<std::size_t>(perm[i])];
        out[i] = sign[i] < 0 ? -c : c;
    }
    return out;
}

namespace {

bool is_even(const std::array<int, 4>& p) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    return inversions % 2 == 0;
}

std::vector<std::array<int, 4>> permutations(bool even_only) {
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        if (!even_only || is_even(p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

template <class V>
void sort_unique(std::vector<V>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class V>
std::vector<V> representatives(const std::vector<V>& vectors) {
    std::vector<V> sorted = vectors;
    sort_unique(sorted);
    if (sorted.size() != vectors.size()) throw InconsistentData("vector list contains repeats");
    std::vector<V> reps;
    for (const auto& v : sorted) {
        const int s = leading_sign(v);
        if (s == 0) throw InconsistentData("zero vector in a ray list");
        if (s < 0) continue;
        if (!std::binary_search(sorted.begin(), sorted.end(), negate(v)))
            throw InconsistentData("vector " + to_string(v) + " has no antipode");
        reps.push_back(v);
    }
    return reps;
}

}  // namespace

std::vector<SignedPermutation> even_signed_permutations() {
    std::vector<SignedPermutation> out;
    for (const auto& p : permutations(true))
        for (int mask = 0; mask < 16; ++mask) {
            SignedPermutation g{p, {}};
            for (int i = 0; i < 4; ++i) g.sign[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(g);
        }
    return out;
}

std::vector<GoldenVector4> orbit(const GoldenVector4& v, const std::vector<SignedPermutation>& group) {
    std::vector<GoldenVector4> out;
    out.reserve(group.size());
    for (const auto& g : group) out.push_back(g.apply(v));
    sort_unique(out);
    return out;
}

std::vector<GoldenVector4> icosian_600cell_vertices() {
    const auto group = even_signed_permutations();
    const GoldenInt one{1}, zero{0}, two{2};
    const std::array<GoldenVector4, 3> seeds{{
        {two, zero, zero, zero},
        {one, one, one, one},
        {zero, GoldenInt::alpha(), one, GoldenInt::beta()},
    }};
    const std::array<std::size_t, 3> expected{8, 16, 96};
    std::vector<GoldenVector4> all;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const auto o = orbit(seeds[i], group);
        if (o.size() != expected[i])
            throw InconsistentData("orbit of " + to_string(seeds[i]) + " has " + std::to_string(o.size()) +
                                   " vectors, expected " + std::to_string(expected[i]));
        all.insert(all.end(), o.begin(), o.end());
    }
    sort_unique(all);
    if (all.size() != 120) throw InconsistentData("icosian orbits do not total 120 vertices");
    return all;
}

GoldenRaySet icosian_600cell() { return merge_antipodes(PolytopeId::Cell600, icosian_600cell_vertices()); }

GoldenRaySet merge_antipodes(PolytopeId polytope, const std::vector<GoldenVector4>& vectors) {
    return {polytope, representatives(vectors)};
}

IntRaySet merge_antipodes(PolytopeId polytope, const std::vector<IntVector8>& vectors) {
    return {polytope, representatives(vectors)};
}

GoldenRaySet scale_by_alpha(const GoldenRaySet& rs) {
    GoldenRaySet out{rs.polytope, {}};
    for (const auto& v : rs.vectors) {
        auto w = scale(GoldenInt::alpha(), v);
        if (leading_sign(w) < 0) w = negate(w);
        out.vectors.push_back(w);
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

IntVector8 phi_map(const GoldenVector4& v) {
    IntVector8 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = v[i].m;
        out[i + 4] = v[i].n;
    }
    return out;
}

std::vector<IntVector8> e8_roots() {
    const auto h4a = icosian_600cell_vertices();
    std::vector<IntVector8> roots;
    for (const auto& v : h4a) {
        roots.push_back(phi_map(v));
        roots.push_back(phi_map(scale(GoldenInt::alpha(), v)));
    }
    sort_unique(roots);
    if (roots.size() != 240) throw InconsistentData("phi image has " + std::to_string(roots.size()) + " roots, expected 240");
    for (const auto& r : roots)
        if (inner_product(r, r) != 4) throw InconsistentData("root " + to_string(r) + " does not have norm 4");
    return roots;
}

IntRaySet e8_rays() { return merge_antipodes(PolytopeId::Gosset421, e8_roots()); }

std::vector<GoldenVector4> cell120_vertices_from_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("vertex data is not valid JSON: ") + e.what());
    }
    std::vector<GoldenVector4> all;
    std::size_t expected = 0;
    try {
        expected = doc.at("vertex_count").get<std::size_t>();
        for (const auto& o : doc.at("orbits")) {
            GoldenVector4 pattern;
            const auto& coords = o.at("pattern");
            if (coords.size() != 4) throw ParseError("orbit pattern needs four coordinates");
            for (std::size_t i = 0; i < 4; ++i)
                pattern[i] = GoldenInt{coords[i].at(0).get<std::int64_t>(), coords[i].at(1).get<std::int64_t>()};
            const std::string kind = o.at("permutations").get<std::string>();
            if (kind != "all" && kind != "even") throw ParseError("permutations must be 'all' or 'even'");
            for (const auto& p : permutations(kind == "even"))
                for (int mask = 0; mask < 16; ++mask) {
                    SignedPermutation g{p, {}};
                    for (int i = 0; i < 4; ++i) g.sign[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
                    all.push_back(g.apply(pattern));
                }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("vertex data has the wrong shape: ") + e.what());
    }
    sort_unique(all);
    if (all.size() != expected)
        throw InconsistentData("vertex orbits give " + std::to_string(all.size()) + " vertices, expected " +
                               std::to_string(expected));
    return all;
}

std::vector<GoldenVector4> cell120_vertices() { return cell120_vertices_from_json(embedded_cell120_vertices_text()); }

GoldenRaySet build_120cell_rays() {
    const auto vertices = cell120_vertices();
    if (vertices.size() != 600) throw InconsistentData("120-cell data does not give 600 vertices");
    auto rs = merge_antipodes(PolytopeId::Cell120, vertices);
    if (rs.size() != 300) throw InconsistentData("120-cell vertices do not merge to 300 rays");
    return rs;
}

GoldenRaySet edge_directions(PolytopeId polytope, const std::vector<GoldenVector4>& vertices) {
    std::vector<GoldenVector4> shortest;
    GoldenInt best;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            GoldenVector4 d;
            for (std::size_t k = 0; k < 4; ++k) d[k] = vertices[i][k] - vertices[j][k];
            const GoldenInt norm = inner_product(d, d);
            if (norm.is_zero()) continue;
            const int cmp = shortest.empty() ? -1 : (norm - best).sign();
            if (cmp > 0) continue;
            if (cmp < 0) {
                shortest.clear();
                best = norm;
            }
            if (leading_sign(d) < 0) d = negate(d);
            shortest.push_back(d);
        }
    sort_unique(shortest);
    return {polytope, std::move(shortest)};
}

OrthoGraph::OrthoGraph(std::size_t vertex_count) : adjacency_(vertex_count, BitVector(vertex_count)) {}

void OrthoGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count()) throw DomainError("edge endpoint outside the graph");
    if (u == v || adjacency_[u].test(v)) return;
    adjacency_[u].set(v);
    adjacency_[v].set(u);
    edges_.push_back({std::min(u, v), std::max(u, v)});
}

OrthoGraph orthogonality_graph(const GoldenRaySet& rs) {
    OrthoGraph g(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j)
            if (inner_product(rs.vectors[i], rs.vectors[j]).is_zero()) g.add_edge(i, j);
    return g;
}

OrthoGraph orthogonality_graph(const IntRaySet& rs) {
    OrthoGraph g(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j)
            if (inner_product(rs.vectors[i], rs.vectors[j]) == 0) g.add_edge(i, j);
    return g;
}

namespace {

// Extends `clique` with vertices from `candidates` (all greater than the last member) in increasing order.
void extend_clique(const OrthoGraph& g, std::size_t d, std::vector<RayId>& clique, const BitVector& candidates,
                   std::vector<Basis>& out) {
    if (clique.size() == d) {
        out.emplace_back(clique);
        return;
    }
    if (clique.size() + candidates.weight() < d) return;
    for (auto v : candidates.support()) {
        BitVector next = candidates & g.neighbors(v);
        for (std::size_t u = 0; u <= v; ++u) next.set(u, false);
        clique.push_back(static_cast<RayId>(v + 1));
        extend_clique(g, d, clique, next, out);
        clique.pop_back();
    }
}

}  // namespace

std::vector<Basis> enumerate_bases(const OrthoGraph& g, int d) {
    if (d < 1) throw DomainError("basis size must be positive");
    std::vector<Basis> out;
    std::vector<RayId> clique;
    BitVector all(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) all.set(v);
    extend_clique(g, static_cast<std::size_t>(d), clique, all, out);
    return out;
}

std::vector<int> ray_occurrences(const std::vector<Basis>& bases, std::size_t ray_count) {
    std::vector<int> out(ray_count, 0);
    for (const auto& b : bases)
        for (RayId r : b.rays()) {
            if (r < 1 || static_cast<std::size_t>(r) > ray_count) throw DomainError("ray id outside the set");
            ++out[static_cast<std::size_t>(r - 1)];
        }
    return out;
}

bool is_saturated(const OrthoGraph& g, const std::vector<Basis>& bases) {
    OrthoGraph covered(g.vertex_count());
    for (const auto& b : bases) {
        const auto& r = b.rays();
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i + 1; j < r.size(); ++j) {
                const auto u = static_cast<std::size_t>(r[i] - 1), v = static_cast<std::size_t>(r[j] - 1);
                if (!g.adjacent(u, v)) return false;
                covered.add_edge(u, v);
            }
    }
    return covered.edge_count() == g.edge_count();
}

std::string ray_set_json(const GoldenRaySet& rs) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& v : rs.vectors) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& c : v) coords.push_back({c.m, c.n});
        rays.push_back(coords);
    }
    return nlohmann::json{{"polytope", std::string(to_string(rs.polytope))}, {"ray_count", rs.size()}, {"rays", rays}}
               .dump() +
           "\n";
}

std::string ray_set_json(const IntRaySet& rs) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& v : rs.vectors) rays.push_back(v);
    return nlohmann::json{{"polytope", std::string(to_string(rs.polytope))}, {"ray_count", rs.size()}, {"rays", rays}}
               .dump() +
           "\n";
}

}  // namespace kspoly
