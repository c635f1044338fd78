#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kspoly/layout.hpp"
#include "kspoly/raysystem.hpp"

namespace kspoly {

/// Ray layout plus generator list of one polytope, as shipped in core/data/*.json.
struct PolytopeData {
    PentadecagonLayout layout;
    std::vector<Generator> generators;
};

/// The dataset compiled into the library.
PolytopeData load_dataset(PolytopeId id);
std::string_view embedded_dataset_text(PolytopeId id);

/// {"polytope","dimension","pentadecagons":[{"label","lo","hi","radius","angle_deg"}],
///  "generators":[{"label","rays":[...]}]}. Throws ParseError / InconsistentData.
PolytopeData parse_dataset(std::string_view json_text);
PolytopeData load_dataset_file(const std::filesystem::path& path);
std::string dataset_to_json(const PolytopeData& data);

/// FNV-1a over the canonical generator listing (labels and rays only).
std::uint64_t dataset_fingerprint(const PolytopeData& data);

/// 120-cell vertex orbits in golden-ring coordinates (see core/data/cell120_vertices.json).
std::string_view embedded_cell120_vertices_text();

/// Basis table exports: JSON array of ray arrays (optionally with origin labels) and CSV.
std::string basis_table_json(const BasisTable& table, bool with_origins);
std::string basis_table_csv(const BasisTable& table);

}  // namespace kspoly
