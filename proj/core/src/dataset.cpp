#include "kspoly/dataset.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "embedded.hpp"
#include "kspoly/error.hpp"

namespace kspoly {

using nlohmann::json;

std::string_view embedded_dataset_text(PolytopeId id) {
    switch (id) {
        case PolytopeId::Cell600: return detail::kCell600Json;
        case PolytopeId::Cell120: return detail::kCell120Json;
        case PolytopeId::Gosset421: return detail::kGossetJson;
    }
    throw DomainError("unknown polytope id");
}

std::string_view embedded_cell120_vertices_text() { return detail::kCell120VerticesJson; }

PolytopeData load_dataset(PolytopeId id) { return parse_dataset(embedded_dataset_text(id)); }

PolytopeData parse_dataset(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("dataset is not valid JSON: ") + e.what());
    }
    try {
        const PolytopeId id = parse_polytope(doc.at("polytope").get<std::string>());
        const int dimension = doc.at("dimension").get<int>();
        std::vector<Pentadecagon> pentadecagons;
        for (const auto& p : doc.at("pentadecagons")) {
            Pentadecagon pd;
            pd.label = p.at("label").get<std::string>();
            pd.lo = p.at("lo").get<int>();
            pd.hi = p.at("hi").get<int>();
            pd.circumradius = p.value("radius", 0.0);
            pd.start_angle_deg = p.value("angle_deg", 0.0);
            pentadecagons.push_back(std::move(pd));
        }
        PentadecagonLayout layout(id, dimension, std::move(pentadecagons));

        std::vector<Generator> generators;
        for (const auto& g : doc.at("generators")) {
            Generator gen{parse_letter(g.at("label").get<std::string>()),
                          Basis(g.at("rays").get<std::vector<RayId>>())};
            try {
                validate_generator(gen, layout);
            } catch (const DomainError& e) {
                throw InconsistentData(e.what());
            }
            generators.push_back(std::move(gen));
        }
        if (generators.empty()) throw InconsistentData("dataset lists no generators");
        return PolytopeData{std::move(layout), std::move(generators)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("dataset has the wrong shape: ") + e.what());
    } catch (const DomainError& e) {
        throw InconsistentData(e.what());
    }
}

PolytopeData load_dataset_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dataset " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_dataset(ss.str());
}

namespace {

std::string number(double v) { return json(v).dump(); }

std::string ray_list(const Basis& b) {
    std::string out = "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(b.rays()[i]);
    }
    return out + "]";
}

}  // namespace

std::string dataset_to_json(const PolytopeData& data) {
    const auto& layout = data.layout;
    std::string out = "{\n";
    out += "  \"polytope\": \"" + std::string(to_string(layout.polytope())) + "\",\n";
    out += "  \"dimension\": " + std::to_string(layout.dimension()) + ",\n";
    out += "  \"pentadecagons\": [\n";
    for (int i = 0; i < layout.pentadecagon_count(); ++i) {
        const auto& p = layout.pentadecagon(i);
        out += "    {\"label\": " + json(p.label).dump() + ", \"lo\": " + std::to_string(p.lo) +
               ", \"hi\": " + std::to_string(p.hi) + ", \"radius\": " + number(p.circumradius) +
               ", \"angle_deg\": " + number(p.start_angle_deg) + "}";
        out += (i + 1 < layout.pentadecagon_count()) ? ",\n" : "\n";
    }
    out += "  ],\n  \"generators\": [\n";
    for (std::size_t g = 0; g < data.generators.size(); ++g) {
        const auto& gen = data.generators[g];
        out += "    {\"label\": " + json(gen.label.text()).dump() + ", \"rays\": " + ray_list(gen.basis) + "}";
        out += (g + 1 < data.generators.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::uint64_t dataset_fingerprint(const PolytopeData& data) {
    std::string canon(to_string(data.layout.polytope()));
    for (const auto& g : data.generators) {
        canon += ';' + g.label.text() + ':';
        for (RayId r : g.basis.rays()) canon += std::to_string(r) + ',';
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string basis_table_json(const BasisTable& table, bool with_origins) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (with_origins) {
            const auto& o = table.origin(i);
            out += "  {\"index\": " + std::to_string(i + 1) + ", \"generator\": " +
                   json(table.generators()[o.generator].label.text()).dump() +
                   ", \"shift\": " + std::to_string(o.shift) + ", \"rays\": " + ray_list(table.basis(i)) + "}";
        } else {
            out += "  " + ray_list(table.basis(i));
        }
        out += (i + 1 < table.size()) ? ",\n" : "\n";
    }
    return out + "]\n";
}

std::string basis_table_csv(const BasisTable& table) {
    const int d = table.layout().dimension();
    std::string out = "index,generator,shift";
    for (int k = 1; k <= d; ++k) out += ",r" + std::to_string(k);
    out += '\n';
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& o = table.origin(i);
        out += std::to_string(i + 1) + "," + table.generators()[o.generator].label.text() + "," +
               std::to_string(o.shift);
        for (RayId r : table.basis(i).rays()) out += "," + std::to_string(r);
        out += '\n';
    }
    return out;
}

}  // namespace kspoly
