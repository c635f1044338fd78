#include "fixtures.hpp"

#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace kspoly::testing {

namespace {

using nlohmann::json;

std::map<std::string, std::vector<std::vector<RayId>>> columns(const json& j) {
    std::map<std::string, std::vector<std::vector<RayId>>> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value().get<std::vector<std::vector<RayId>>>();
    return out;
}

std::map<std::size_t, BigInt> counts(const json& j) {
    std::map<std::size_t, BigInt> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[std::stoul(it.key())] = BigInt(it.value().get<std::string>());
    return out;
}

FixtureBlocks blocks(const json& j) {
    FixtureBlocks b;
    b.bases = columns(j.at("bases"));
    for (auto it = j.at("fonts").begin(); it != j.at("fonts").end(); ++it)
        b.fonts[it.key()] = it.value().get<std::vector<std::string>>();
    return b;
}

ReferenceTables load() {
    const std::string path = std::string(KSPOLY_FIXTURE_DIR) + "/reference_tables.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    const json j = json::parse(in);
    ReferenceTables t;
    t.cell600_columns = columns(j.at("cell600_basis_columns"));
    t.cell120_odd_counts = counts(j.at("cell120_odd_weight_counts"));
    t.gosset_odd_counts = counts(j.at("gosset_odd_weight_counts"));
    t.gosset_independent_words = j.at("gosset_independent_words").get<std::vector<std::string>>();
    t.cell120_independent_words = j.at("cell120_independent_words").get<std::vector<std::string>>();
    t.cdy = blocks(j.at("cell120_cdy_blocks"));
    t.e1e2 = blocks(j.at("gosset_e1e2_blocks"));
    for (const auto& e : j.at("cell120_proof_symbols")) {
        ProofFamily f;
        f.words = e.at("words").get<std::vector<std::string>>();
        f.symbol = e.at("symbol").get<std::string>();
        f.irreducible = e.at("irreducible").get<bool>();
        if (e.contains("parts")) {
            const auto& p = e.at("parts");
            f.parts = ProofFamily::Parts{p.at("count").get<int>(), p.at("symbol").get<std::string>(),
                                         p.at("direct_sum").get<bool>()};
        }
        t.cell120_proofs.push_back(std::move(f));
    }
    for (const auto& e : j.at("gosset_proof_symbols"))
        t.gosset_proofs.push_back({e.at("word").get<std::string>(), e.at("symbol").get<std::string>()});
    return t;
}

LoadedPolytope build(PolytopeId id) {
    auto data = load_dataset(id);
    auto table = build_basis_table(data.layout, data.generators);
    auto profile = build_profile_matrix(data.layout, data.generators);
    auto mod2 = profile_matrix_mod2(profile);
    auto code = gf2_nullspace(mod2);
    return LoadedPolytope{std::move(data), std::move(table), std::move(profile), std::move(mod2), std::move(code)};
}

}  // namespace

const ReferenceTables& reference_tables() {
    static const ReferenceTables tables = load();
    return tables;
}

const LoadedPolytope& polytope(PolytopeId id) {
    static std::mutex mu;
    static std::map<PolytopeId, std::unique_ptr<LoadedPolytope>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[id];
    if (!slot) slot = std::make_unique<LoadedPolytope>(build(id));
    return *slot;
}

Word word(PolytopeId id, const std::string& text) {
    return bind_word(parse_word(text), polytope(id).data.generators, id);
}

}  // namespace kspoly::testing
