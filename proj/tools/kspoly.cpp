#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kspoly/contextuality.hpp"
#include "kspoly/dataset.hpp"
#include "kspoly/error.hpp"
#include "kspoly/geometry.hpp"
#include "kspoly/gf2code.hpp"
#include "kspoly/labeling.hpp"
#include "kspoly/projection.hpp"
#include "kspoly/rigidity.hpp"

using namespace kspoly;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kBadInput = 2, kInconsistent = 3, kNotNullspace = 4, kClaimFailed = 5, kBudget = 6 };

class ExitError : public std::runtime_error {
public:
    ExitError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

struct RunConfig {
    std::string polytope_name = "600cell";
    std::string format = "text";
    std::size_t max_weight = 3;
    std::uint64_t codeword_cap = 1'000'000;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::string data_path;
    std::string out_path;
    bool explicit_polytope = false;
};

struct Loaded {
    PolytopeId id;
    PolytopeData data;
};

Loaded load(const RunConfig& cfg) {
    const PolytopeId requested = parse_polytope(cfg.polytope_name);
    if (cfg.data_path.empty()) return {requested, load_dataset(requested)};
    auto data = load_dataset_file(cfg.data_path);
    if (cfg.explicit_polytope && data.layout.polytope() != requested)
        throw InconsistentData("--data describes " + std::string(to_string(data.layout.polytope())) + ", not " +
                               cfg.polytope_name);
    const auto id = data.layout.polytope();
    return {id, std::move(data)};
}

std::string name(PolytopeId id) { return std::string(to_string(id)); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json rays_json(const Basis& b) { return ordered_json(b.rays()); }

std::string join_rays(const Basis& b, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? sep : "") + std::to_string(b.rays()[i]);
    return out;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw ExitError(kBadInput, "format '" + cfg.format + "' is not available for this command");
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// ---------------------------------------------------------------------------

std::string cmd_gen_bases(const RunConfig& cfg) {
    const auto l = load(cfg);
    const auto table = build_basis_table(l.data.layout, l.data.generators);
    if (cfg.format == "json") return basis_table_json(table, true);
    if (cfg.format == "csv") return basis_table_csv(table);
    std::string out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& o = table.origin(i);
        char head[64];
        std::snprintf(head, sizeof head, "%5zu  %-4s %2d  ", i + 1, table.generators()[o.generator].label.text().c_str(),
                      o.shift);
        out += head + join_rays(table.basis(i)) + "\n";
    }
    return out;
}

std::string cmd_weights(const RunConfig& cfg, bool odd_only) {
    const auto l = load(cfg);
    const auto m = profile_matrix_mod2(build_profile_matrix(l.data.layout, l.data.generators));
    const auto n = m.cols();
    const auto dist = macwilliams_transform(dual_weight_distribution(m), n);
    if (cfg.format == "json") return weight_distribution_json(dist, odd_only);
    if (cfg.format == "csv") return weight_distribution_csv(dist, odd_only);
    const auto spec = gf2_nullspace(m);
    std::string out = std::string(to_string(l.id)) + ": n = " + std::to_string(n) + ", k = " + std::to_string(spec.k) +
                      ", minimality bound " + std::to_string(minimality_bound(n, spec.k)) + "\n";
    BigInt total = 0;
    for (std::size_t w = 0; w <= n; ++w) {
        if ((odd_only && w % 2 == 0) || dist.at(w) == 0) continue;
        total += dist.at(w);
        out += std::to_string(w) + "\t" + dist.at(w).str() + "\n";
    }
    out += "total\t" + total.str() + "\n";
    return out;
}

std::string cmd_words(const RunConfig& cfg, bool all_parities) {
    const auto l = load(cfg);
    const auto m = profile_matrix_mod2(build_profile_matrix(l.data.layout, l.data.generators));
    const auto spec = gf2_nullspace(m);
    CodewordEnumerator e(spec, cfg.max_weight, all_parities ? Parity::Any : Parity::Odd, cfg.codeword_cap);
    std::vector<std::string> words;
    while (auto v = e.next()) words.push_back(render_word(vector_to_word(*v, l.data.generators, l.id)));
    if (cfg.format == "json") {
        ordered_json j{{"polytope", name(l.id)}, {"max_weight", cfg.max_weight},
                       {"parity", all_parities ? "any" : "odd"}, {"count", words.size()}, {"words", words}};
        return dump(j);
    }
    if (cfg.format == "csv") {
        std::string out = "weight,word\n";
        for (const auto& w : words) out += std::to_string(parse_word(w).size()) + "," + w + "\n";
        return out;
    }
    std::string out;
    for (const auto& w : words) out += (w.empty() ? "(empty)" : w) + "\n";
    return out;
}

// ---------------------------------------------------------------------------

struct WordContext {
    Loaded loaded;
    BasisTable table;
    ProfileMatrix profile;
    Word word;
};

WordContext word_context(const RunConfig& cfg, const std::string& text) {
    auto l = load(cfg);
    auto table = build_basis_table(l.data.layout, l.data.generators);
    auto profile = build_profile_matrix(l.data.layout, l.data.generators);
    auto w = bind_word(parse_word(text), l.data.generators, l.id);
    return {std::move(l), std::move(table), std::move(profile), std::move(w)};
}

ordered_json word_header(const WordContext& c) {
    return ordered_json{{"polytope", name(c.loaded.id)}, {"word", render_word(c.word)}, {"letters", c.word.size()}};
}

void require_nullspace(const WordContext& c) {
    if (!is_nullspace_word(c.word, c.profile, c.loaded.data.generators))
        throw ExitError(kNotNullspace, "'" + render_word(c.word) + "' is not a nullspace word of " +
                                           std::string(to_string(c.loaded.id)));
}

std::string word_expand(const RunConfig& cfg, const WordContext& c) {
    const auto idx = word_to_bases(c.word, c.table);
    if (cfg.format == "csv") {
        std::string out = "index,generator,shift";
        for (int k = 1; k <= c.table.layout().dimension(); ++k) out += ",r" + std::to_string(k);
        out += "\n";
        for (auto i : idx)
            out += std::to_string(i + 1) + "," + c.table.generators()[c.table.origin(i).generator].label.text() + "," +
                   std::to_string(c.table.origin(i).shift) + "," + join_rays(c.table.basis(i), ",") + "\n";
        return out;
    }
    if (cfg.format == "json") {
        auto j = word_header(c);
        ordered_json bases = ordered_json::array();
        for (auto i : idx)
            bases.push_back({{"index", i + 1},
                             {"generator", c.table.generators()[c.table.origin(i).generator].label.text()},
                             {"shift", c.table.origin(i).shift},
                             {"rays", rays_json(c.table.basis(i))}});
        j["basis_count"] = idx.size();
        j["bases"] = bases;
        return dump(j);
    }
    std::string out;
    for (auto i : idx) out += std::to_string(i + 1) + "\t" + join_rays(c.table.basis(i)) + "\n";
    return out;
}

std::string word_symbol(const RunConfig& cfg, const WordContext& c) {
    require_format(cfg, {"text", "json"});
    const auto& g = c.loaded.data.generators;
    const auto profile = pentadecagon_counts(c.word, g, c.loaded.data.layout);
    const auto fast = symbol_from_word(c.word, g, c.loaded.data.layout);
    const auto idx = word_to_bases(c.word, c.table);
    const auto slow = ray_basis_symbol(c.table, idx);
    if (!(fast == slow))
        throw ExitError(kInconsistent, "profile symbol " + fast.text() + " differs from expanded " + slow.text());
    if (cfg.format == "json") {
        auto j = word_header(c);
        j["pentadecagons"] = profile;
        j["symbol"] = fast.text();
        ordered_json terms = ordered_json::array();
        for (const auto& t : fast.ray_terms) terms.push_back({{"multiplicity", t.multiplicity}, {"rays", t.ray_count}});
        j["ray_terms"] = terms;
        j["basis_count"] = fast.basis_count;
        j["basis_size"] = fast.basis_size;
        return dump(j);
    }
    return render_word(c.word) + " -> " + profile + " -> " + fast.text() + "\n";
}

std::string word_verify(const RunConfig& cfg, const WordContext& c, bool with_ks) {
    require_format(cfg, {"text", "json"});
    const Proof p = proof_from_word(c.table, c.word);
    const auto cert = verify_parity_proof(p);
    const bool nullspace = is_nullspace_word(c.word, c.profile, c.loaded.data.generators);
    std::optional<bool> colourable;
    if (with_ks && !c.word.empty()) colourable = find_ks_assignment(p.bases(), cfg.node_budget).has_value();
    if (!c.word.empty() && nullspace != cert.offending_rays.empty())
        throw ExitError(kInconsistent, "nullspace membership disagrees with the expanded ray counts");
    if (cfg.format == "json") {
        auto j = word_header(c);
        j["valid"] = cert.valid;
        j["nullspace"] = nullspace;
        j["basis_count"] = cert.basis_count;
        j["odd_basis_count"] = cert.odd_basis_count;
        j["offending_rays"] = cert.offending_rays;
        if (colourable) j["ks_colourable"] = *colourable;
        return dump(j);
    }
    std::string out = (c.word.empty() ? "(empty)" : render_word(c.word)) + ": " +
                      (cert.valid ? "valid parity proof" : "not a parity proof") + "\n";
    out += "  bases " + std::to_string(cert.basis_count) + (cert.odd_basis_count ? " (odd)" : " (even)") + "\n";
    out += "  rays with odd count " + std::to_string(cert.offending_rays.size()) + "\n";
    if (colourable) out += std::string("  0/1 assignment ") + (*colourable ? "exists" : "impossible") + "\n";
    return out;
}

std::string word_minimal(const RunConfig& cfg, const WordContext& c) {
    require_format(cfg, {"text", "json"});
    require_nullspace(c);
    if (c.word.size() % 2 == 0)
        throw ExitError(kNotNullspace, "'" + render_word(c.word) + "' has even length and is not a parity proof");
    const auto& g = c.loaded.data.generators;
    const auto n = g.size();
    const auto k = gf2_nullspace(profile_matrix_mod2(c.profile)).k;
    const auto bound = minimality_bound(n, k);
    const bool minimal = c.word.size() <= bound && is_minimal_word(c.word, c.profile, g);
    if (cfg.format == "json") {
        auto j = word_header(c);
        j["bound"] = bound;
        j["minimal"] = minimal;
        return dump(j);
    }
    return render_word(c.word) + ": " + (minimal ? "minimal" : "not minimal") + " (bound " + std::to_string(bound) + ")\n";
}

std::string word_decompose(const RunConfig& cfg, const WordContext& c) {
    require_nullspace(c);
    if (c.word.empty()) throw ExitError(kNotNullspace, "the empty word selects no bases");
    const Proof p = proof_from_word(c.table, c.word);
    const auto d = incidence_nullspace_proofs(p);
    const auto kind = classify_decomposition(p, d.proofs);
    const auto smallest = smallest_components(p, d.proofs);
    const bool irreducible = d.total_found == 1 && d.proofs.front().positions.size() == p.size();
    const char* kind_text = irreducible ? "irreducible" : kind == DecompositionKind::DirectSum ? "direct_sum" : "overlapping";
    if (cfg.format == "csv") {
        std::string out = "bases,symbol,positions\n";
        for (const auto& s : d.proofs) {
            std::string pos;
            for (auto q : s.positions) pos += (pos.empty() ? "" : " ") + std::to_string(q);
            out += std::to_string(s.positions.size()) + "," + s.symbol.text() + "," + pos + "\n";
        }
        return out;
    }
    if (cfg.format == "json") {
        auto j = word_header(c);
        j["basis_count"] = p.size();
        j["nullity"] = d.nullity;
        j["total_found"] = d.total_found;
        j["truncated"] = d.truncated;
        j["classification"] = kind_text;
        j["smallest_size"] = smallest.empty() ? p.size() : smallest.front().positions.size();
        j["smallest_count"] = smallest.size();
        ordered_json proofs = ordered_json::array();
        for (const auto& s : d.proofs) {
            std::vector<std::size_t> indices;
            for (auto i : s.basis_indices) indices.push_back(i + 1);
            proofs.push_back({{"basis_count", s.positions.size()},
                              {"symbol", s.symbol.text()},
                              {"positions", s.positions},
                              {"bases", indices}});
        }
        j["proofs"] = proofs;
        return dump(j);
    }
    std::string out = render_word(c.word) + ": " + std::to_string(p.size()) + " bases, incidence nullity " +
                      std::to_string(d.nullity) + ", " + std::to_string(d.total_found) + " parity proofs, " + kind_text +
                      "\n";
    for (const auto& s : d.proofs) {
        out += "  " + s.symbol.text() + "  {";
        for (std::size_t i = 0; i < s.positions.size(); ++i) out += (i ? "," : "") + std::to_string(s.positions[i]);
        out += "}\n";
    }
    if (d.truncated) out += "  (list truncated)\n";
    return out;
}

std::string cmd_word(const RunConfig& cfg, const std::string& text, const std::string& action, bool with_ks) {
    const auto c = word_context(cfg, text);
    if (action == "expand") return word_expand(cfg, c);
    if (action == "symbol") {
        if (c.word.empty()) throw ExitError(kBadInput, "the empty word has no ray-basis symbol");
        return word_symbol(cfg, c);
    }
    if (action == "verify") return word_verify(cfg, c, with_ks);
    if (action == "minimal") return word_minimal(cfg, c);
    return word_decompose(cfg, c);
}

// ---------------------------------------------------------------------------

std::string cmd_verify_proof(const RunConfig& cfg, const std::string& path) {
    require_format(cfg, {"text", "json"});
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open proof file " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("proof file is not valid JSON: ") + e.what());
    }
    std::vector<Basis> bases;
    std::optional<PolytopeId> id;
    try {
        if (doc.contains("polytope")) id = parse_polytope(doc.at("polytope").get<std::string>());
        for (const auto& b : doc.at("bases")) bases.emplace_back(b.get<std::vector<RayId>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("proof file has the wrong shape: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    std::size_t unknown = 0;
    if (id) {
        RunConfig c = cfg;
        c.polytope_name = std::string(to_string(*id));
        c.explicit_polytope = true;
        const auto l = load(c);
        const auto table = build_basis_table(l.data.layout, l.data.generators);
        for (const auto& b : bases)
            if (!table.find(b)) ++unknown;
        if (unknown) throw InconsistentData(std::to_string(unknown) + " bases are not bases of " + c.polytope_name);
    }
    const auto cert = verify_parity_proof(bases);
    const bool colourable = !bases.empty() && find_ks_assignment(bases, cfg.node_budget).has_value();
    if (cfg.format == "json") {
        ordered_json j;
        if (id) j["polytope"] = name(*id);
        j["valid"] = cert.valid;
        j["basis_count"] = cert.basis_count;
        j["odd_basis_count"] = cert.odd_basis_count;
        j["offending_rays"] = cert.offending_rays;
        if (!bases.empty()) {
            j["symbol"] = ray_basis_symbol(bases).text();
            j["ks_colourable"] = colourable;
        }
        return dump(j);
    }
    std::string out = std::string(cert.valid ? "valid parity proof" : "not a parity proof") + ", " +
                      std::to_string(cert.basis_count) + " bases\n";
    if (!bases.empty()) {
        out += "  symbol " + ray_basis_symbol(bases).text() + "\n";
        out += std::string("  0/1 assignment ") + (colourable ? "exists" : "impossible") + "\n";
    }
    return out;
}

std::string cmd_dataset(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto l = load(cfg);
    if (cfg.format == "json") return dataset_to_json(l.data);
    char fp[32];
    std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(dataset_fingerprint(l.data)));
    std::string out = std::string(to_string(l.id)) + ": " + std::to_string(l.data.layout.ray_count()) + " rays, " +
                      std::to_string(l.data.layout.pentadecagon_count()) + " pentadecagons, " +
                      std::to_string(l.data.generators.size()) + " generators, fingerprint " + fp + "\n";
    for (const auto& p : l.data.layout.pentadecagons())
        out += "  " + p.label + "\t" + std::to_string(p.lo) + "-" + std::to_string(p.hi) + "\tradius " +
               fixed(p.circumradius, 4) + "\tangle " + fixed(p.start_angle_deg, 2) + "\n";
    return out;
}

// ---------------------------------------------------------------------------

struct Geometry {
    PolytopeId id;
    std::vector<std::vector<double>> real_rays;
    std::string rays_json;
    std::vector<Basis> bases;
    OrthoGraph graph{0};
    int dimension = 4;
};

template <class RS>
std::vector<std::vector<double>> to_doubles(const RS& rs) {
    std::vector<std::vector<double>> out;
    for (const auto& v : rs.vectors) {
        const auto r = to_real(v);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

Geometry build_geometry(PolytopeId id) {
    Geometry g;
    g.id = id;
    g.dimension = expected_shape(id).dimension;
    if (id == PolytopeId::Gosset421) {
        const auto rs = e8_rays();
        g.real_rays = to_doubles(rs);
        g.rays_json = ray_set_json(rs);
        g.graph = orthogonality_graph(rs);
    } else {
        const auto rs = id == PolytopeId::Cell600 ? icosian_600cell() : build_120cell_rays();
        g.real_rays = to_doubles(rs);
        g.rays_json = ray_set_json(rs);
        g.graph = orthogonality_graph(rs);
    }
    g.bases = enumerate_bases(g.graph, g.dimension);
    return g;
}

std::string geometry_construct(const RunConfig& cfg, PolytopeId id) {
    require_format(cfg, {"text", "json"});
    const auto g = build_geometry(id);
    const auto shape = expected_shape(id);
    const auto occ = ray_occurrences(g.bases, g.real_rays.size());
    const bool uniform = std::all_of(occ.begin(), occ.end(), [&](int c) { return c == shape.bases_per_ray; });
    const bool saturated = is_saturated(g.graph, g.bases);
    const bool ok = static_cast<int>(g.real_rays.size()) == shape.ray_count &&
                    g.bases.size() == static_cast<std::size_t>(shape.ray_count * shape.bases_per_ray / shape.dimension) &&
                    uniform && saturated;
    std::string out;
    if (cfg.format == "json") {
        ordered_json j{{"polytope", name(id)},
                       {"ray_count", g.real_rays.size()},
                       {"edge_count", g.graph.edge_count()},
                       {"basis_count", g.bases.size()},
                       {"bases_per_ray", uniform ? shape.bases_per_ray : -1},
                       {"saturated", saturated},
                       {"symbol", ray_basis_symbol(g.bases).text()},
                       {"claims_pass", ok}};
        j["rays"] = nlohmann::ordered_json::parse(g.rays_json)["rays"];
        out = dump(j);
    } else {
        out = std::string(to_string(id)) + ": " + std::to_string(g.real_rays.size()) + " rays, " +
              std::to_string(g.graph.edge_count()) + " orthogonal pairs, " + std::to_string(g.bases.size()) +
              " bases, " + ray_basis_symbol(g.bases).text() + (saturated ? ", saturated" : ", not saturated") + "\n";
    }
    if (!ok) throw ExitError(kClaimFailed, out + "construction does not reproduce the expected counts");
    return out;
}

// Listed radii known to disagree with the computed projection.
bool flagged_radius(PolytopeId id, const std::string& label) { return id == PolytopeId::Gosset421 && label == "C"; }

std::string geometry_project(const RunConfig& cfg, PolytopeId id, const PentadecagonLayout& layout) {
    CoxeterProjection p;
    if (id == PolytopeId::Cell600) p = coxeter_projection(icosian_600cell());
    else if (id == PolytopeId::Gosset421) p = coxeter_projection(e8_rays());
    else p = coxeter_projection(build_120cell_rays(), edge_directions(PolytopeId::Cell120, cell120_vertices()));

    // Listed start angles are rounded to 0.01 degree on the 120-cell.
    const double angle_tol = id == PolytopeId::Cell120 ? 0.011 : 1e-3;
    bool ok = static_cast<int>(p.rings.size()) == layout.pentadecagon_count();
    ordered_json rings = ordered_json::array();
    std::string text = std::string(to_string(id)) + ": " + std::to_string(p.rings.size()) + " rings\n";
    for (std::size_t i = 0; i < p.rings.size(); ++i) {
        const auto& r = p.rings[i];
        ordered_json jr{{"radius", r.radius}, {"start_angle_deg", r.start_angle_deg},
                        {"max_spacing_error_deg", r.max_spacing_error_deg}, {"rays", r.rays}};
        std::string status = "ok";
        if (r.rays.size() != 15 || r.max_spacing_error_deg > 1e-6) status = "failed";
        if (static_cast<int>(i) < layout.pentadecagon_count()) {
            const auto& pd = layout.pentadecagon(static_cast<int>(i));
            const double dev = r.radius - pd.circumradius;
            jr["label"] = pd.label;
            jr["listed_radius"] = pd.circumradius;
            jr["deviation"] = dev;
            double rel = std::fmod((r.start_angle_deg - p.rings[0].start_angle_deg) -
                                       (pd.start_angle_deg - layout.pentadecagon(0).start_angle_deg), 12.0);
            if (rel < 0) rel += 12.0;
            rel = std::min(rel, 12.0 - rel);
            jr["angle_deviation"] = rel;
            if (rel > angle_tol) status = "failed";
            if (std::abs(dev) > 5e-4 && status == "ok") status = flagged_radius(id, pd.label) ? "flagged" : "failed";
            text += "  " + pd.label + "\t" + fixed(r.radius, 7) + "\t(listed " + fixed(pd.circumradius, 4) + ")\tstart " +
                    fixed(r.start_angle_deg, 4) + "\t" + status + "\n";
        }
        if (status == "failed") ok = false;
        jr["status"] = status;
        rings.push_back(jr);
    }
    std::string out;
    if (cfg.format == "csv") out = projection_csv(p);
    else if (cfg.format == "json")
        out = dump(ordered_json{{"polytope", name(id)}, {"ring_count", p.rings.size()}, {"claims_pass", ok}, {"rings", rings}});
    else out = text;
    if (!ok) throw ExitError(kClaimFailed, out + "projection does not match the listed pentadecagons");
    return out;
}

std::string geometry_match(const RunConfig& cfg, PolytopeId id, const PolytopeData& data) {
    require_format(cfg, {"text", "json"});
    const auto g = build_geometry(id);
    const auto table = build_basis_table(data.layout, data.generators);
    const auto r = match_labeling(g.bases, g.real_rays.size(), table, cfg.node_budget);
    std::string out;
    if (cfg.format == "json") {
        ordered_json j{{"polytope", name(id)}, {"found", r.found}, {"nodes", r.nodes}};
        if (r.found) j["mapping"] = r.mapping;
        else j["failure"] = r.failure;
        out = dump(j);
    } else {
        out = std::string(to_string(id)) + ": " +
              (r.found ? "geometric bases match the generator table (" + std::to_string(r.nodes) + " search nodes)"
                       : "no matching labeling: " + r.failure) +
              "\n";
    }
    if (!r.found) throw ExitError(kClaimFailed, out);
    return out;
}

std::string geometry_rigidity(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto r = rigidity_demo();
    const auto phi = check_phi_orthogonality();
    const bool ok = r.all_pass() && phi.preserved == phi.h4_orthogonal;
    std::string out;
    if (cfg.format == "json") {
        ordered_json claims = ordered_json::array();
        for (const auto& c : r.claims)
            claims.push_back({{"claim", c.description}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass()}});
        ordered_json j{{"claims", claims},
                       {"all_pass", r.all_pass()},
                       {"phi_pairs", phi.pairs},
                       {"h4_orthogonal", phi.h4_orthogonal},
                       {"preserved", phi.preserved},
                       {"gained", phi.gained}};
        out = dump(j);
    } else {
        for (const auto& c : r.claims)
            out += std::string(c.pass() ? "pass  " : "FAIL  ") + c.description + (c.expected ? "" : " (expected false)") + "\n";
        out += "phi keeps " + std::to_string(phi.preserved) + "/" + std::to_string(phi.h4_orthogonal) +
               " orthogonal pairs and adds " + std::to_string(phi.gained) + "\n";
    }
    if (!ok) throw ExitError(kClaimFailed, out);
    return out;
}

std::string cmd_geometry(const RunConfig& cfg, const std::string& check) {
    if (check == "rigidity") return geometry_rigidity(cfg);
    const auto l = load(cfg);
    if (check == "construct") return geometry_construct(cfg, l.id);
    if (check == "project") return geometry_project(cfg, l.id, l.data.layout);
    return geometry_match(cfg, l.id, l.data);
}

void emit(const RunConfig& cfg, const std::string& text, bool to_stderr = false) {
    if (!cfg.out_path.empty() && !to_stderr) {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) throw ExitError(kBadInput, "cannot write " + cfg.out_path);
        out << text;
        return;
    }
    (to_stderr ? std::cerr : std::cout) << text;
}

std::uint64_t node_budget_from_env() {
    const char* env = std::getenv("KSPOLY_NODE_BUDGET");
    if (!env || !*env) return kDefaultNodeBudget;
    const std::string_view text(env);
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size() || v == 0) throw ExitError(kBadInput, "KSPOLY_NODE_BUDGET must be a positive integer");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fifteen-fold parity proofs of the 600-cell, the 120-cell and Gosset's polytope"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "kspoly 0.1.0");

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--polytope", cfg.polytope_name, "600cell, 120cell or gosset")
            ->check(CLI::IsMember({"600cell", "120cell", "gosset"}))
            ->each([&](const std::string&) { cfg.explicit_polytope = true; });
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--data", cfg.data_path, "Dataset JSON replacing the embedded generator table");
        sub->add_option("--out", cfg.out_path, "Write the report to a file");
    };

    add_common(&app, {"text", "json", "csv"});

    auto* gen = app.add_subcommand("gen-bases", "Expand the generators into the full basis table");
    add_common(gen, {"text", "json", "csv"});

    bool odd = false;
    auto* weights = app.add_subcommand("weights", "Codeword weight distribution via the MacWilliams identities");
    add_common(weights, {"text", "json", "csv"});
    weights->add_flag("--odd", odd, "Only odd weights (parity proofs)");

    bool all_parities = false;
    auto* words = app.add_subcommand("words", "List nullspace words up to a maximum length");
    add_common(words, {"text", "json", "csv"});
    words->add_option("--max-weight", cfg.max_weight, "Maximum number of letters")->check(CLI::PositiveNumber);
    words->add_option("--cap", cfg.codeword_cap, "Stop with exit 6 after this many words")->check(CLI::PositiveNumber);
    words->add_flag("--all", all_parities, "Include even-length words");

    std::string word_text, action;
    bool with_ks = false;
    auto* word = app.add_subcommand("word", "Inspect one word");
    add_common(word, {"text", "json", "csv"});
    word->add_option("word", word_text, "Letters, e.g. \"a b e g k r i'\"")->required();
    word->add_option("action", action, "expand, symbol, verify, minimal or decompose")
        ->required()
        ->check(CLI::IsMember({"expand", "symbol", "verify", "minimal", "decompose"}));
    word->add_flag("--ks", with_ks, "verify: also search for a noncontextual 0/1 assignment");

    std::string proof_path;
    auto* verify = app.add_subcommand("verify-proof", "Check a JSON list of bases for the parity property");
    add_common(verify, {"text", "json"});
    verify->add_option("file", proof_path, "{\"polytope\": ..., \"bases\": [[...], ...]}")->required();

    auto* dataset = app.add_subcommand("dataset", "Show or export the generator table");
    add_common(dataset, {"text", "json"});

    std::string check;
    auto* geometry = app.add_subcommand("geometry", "Rebuild rays and bases from coordinates");
    add_common(geometry, {"text", "json", "csv"});
    geometry->add_option("check", check, "construct, project, match or rigidity")
        ->required()
        ->check(CLI::IsMember({"construct", "project", "match", "rigidity"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (cfg.format == "csv" && (verify->parsed() || dataset->parsed()))
            throw ExitError(kBadInput, "csv output is not available for this command");
        cfg.node_budget = node_budget_from_env();
        std::string out;
        if (gen->parsed()) out = cmd_gen_bases(cfg);
        else if (weights->parsed()) out = cmd_weights(cfg, odd);
        else if (words->parsed()) out = cmd_words(cfg, all_parities);
        else if (word->parsed()) out = cmd_word(cfg, word_text, action, with_ks);
        else if (verify->parsed()) out = cmd_verify_proof(cfg, proof_path);
        else if (dataset->parsed()) out = cmd_dataset(cfg);
        else out = cmd_geometry(cfg, check);
        emit(cfg, out);
        return kOk;
    } catch (const ExitError& e) {
        emit(cfg, std::string("kspoly: ") + e.what() + "\n", true);
        return e.code();
    } catch (const ParseError& e) {
        std::cerr << "kspoly: " << e.what() << "\n";
        return kBadInput;
    } catch (const DomainError& e) {
        std::cerr << "kspoly: " << e.what() << "\n";
        return kBadInput;
    } catch (const InconsistentData& e) {
        std::cerr << "kspoly: " << e.what() << "\n";
        return kInconsistent;
    } catch (const OverflowError& e) {
        std::cerr << "kspoly: " << e.what() << "\n";
        return kInconsistent;
    } catch (const BudgetExceeded& e) {
        std::cerr << "kspoly: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "kspoly: " << e.what() << "\n";
        return kInconsistent;
    }
}
