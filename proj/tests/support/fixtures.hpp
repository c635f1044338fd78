#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kspoly/dataset.hpp"
#include "kspoly/gf2code.hpp"
#include "kspoly/raysystem.hpp"

namespace kspoly::testing {

/// Bases of a word's orbits with the font marking of each row.
struct FixtureBlocks {
    std::map<std::string, std::vector<std::vector<RayId>>> bases;
    std::map<std::string, std::vector<std::string>> fonts;
};

struct ProofFamily {
    struct Parts {
        int count = 0;
        std::string symbol;
        bool direct_sum = false;
    };
    std::vector<std::string> words;
    std::string symbol;
    bool irreducible = false;
    std::optional<Parts> parts;
};

struct WordSymbol {
    std::string word;
    std::string symbol;
};

/// Hand-transcribed reference data (tests/fixtures/reference_tables.json).
struct ReferenceTables {
    std::map<std::string, std::vector<std::vector<RayId>>> cell600_columns;
    std::map<std::size_t, BigInt> cell120_odd_counts;
    std::map<std::size_t, BigInt> gosset_odd_counts;
    std::vector<std::string> gosset_independent_words;
    std::vector<std::string> cell120_independent_words;
    FixtureBlocks cdy;
    FixtureBlocks e1e2;
    std::vector<ProofFamily> cell120_proofs;
    std::vector<WordSymbol> gosset_proofs;
};

const ReferenceTables& reference_tables();

/// Embedded dataset with its basis table and profile matrix, built once per process.
struct LoadedPolytope {
    PolytopeData data;
    BasisTable table;
    ProfileMatrix profile;
    BitMatrix profile_mod2;
    CodeSpec code;
};

const LoadedPolytope& polytope(PolytopeId id);

Word word(PolytopeId id, const std::string& text);

}  // namespace kspoly::testing
