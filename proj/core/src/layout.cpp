#include "kspoly/layout.hpp"

#include <set>
#include <string>

#include "kspoly/error.hpp"

namespace kspoly {

std::string_view to_string(PolytopeId id) {
    switch (id) {
        case PolytopeId::Cell600: return "600cell";
        case PolytopeId::Cell120: return "120cell";
        case PolytopeId::Gosset421: return "gosset";
    }
    return "unknown";
}

PolytopeId parse_polytope(std::string_view name) {
    if (name == "600cell") return PolytopeId::Cell600;
    if (name == "120cell") return PolytopeId::Cell120;
    if (name == "gosset") return PolytopeId::Gosset421;
    throw ParseError("unknown polytope '" + std::string(name) + "' (expected 600cell, 120cell or gosset)");
}

PolytopeShape expected_shape(PolytopeId id) {
    switch (id) {
        case PolytopeId::Cell600: return {60, 4, 4, 5};
        case PolytopeId::Cell120: return {300, 20, 4, 9};
        case PolytopeId::Gosset421: return {120, 8, 8, 135};
    }
    throw DomainError("unknown polytope id");
}

PentadecagonLayout::PentadecagonLayout(PolytopeId polytope, int dimension, std::vector<Pentadecagon> pentadecagons)
    : polytope_(polytope), dimension_(dimension), pentadecagons_(std::move(pentadecagons)) {
    const auto shape = expected_shape(polytope_);
    if (dimension_ != shape.dimension)
        throw InconsistentData("layout dimension " + std::to_string(dimension_) + " does not match " +
                               std::string(to_string(polytope_)));
    if (pentadecagon_count() != shape.pentadecagon_count)
        throw InconsistentData("expected " + std::to_string(shape.pentadecagon_count) + " pentadecagons, got " +
                               std::to_string(pentadecagon_count()));
    std::set<std::string> labels;
    RayId next = 1;
    for (const auto& p : pentadecagons_) {
        if (p.lo != next || p.hi != p.lo + kOrbitSize - 1)
            throw InconsistentData("pentadecagon " + p.label + " must span rays " + std::to_string(next) + "-" +
                                   std::to_string(next + kOrbitSize - 1));
        if (p.label.empty() || !labels.insert(p.label).second)
            throw InconsistentData("pentadecagon label '" + p.label + "' is empty or repeated");
        next = p.hi + 1;
    }
}

int PentadecagonLayout::pentadecagon_of(RayId r) const {
    if (!contains(r)) throw DomainError("ray " + std::to_string(r) + " outside 1.." + std::to_string(ray_count()));
    return (r - 1) / kOrbitSize;
}

RayId PentadecagonLayout::shift_ray(RayId r, int shift) const {
    const int p = pentadecagon_of(r);
    const RayId lo = pentadecagons_[static_cast<std::size_t>(p)].lo;
    const int s = ((shift % kOrbitSize) + kOrbitSize) % kOrbitSize;
    return lo + (r - lo + s) % kOrbitSize;
}

}  // namespace kspoly
