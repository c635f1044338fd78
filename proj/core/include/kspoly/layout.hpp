#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kspoly {

/// Rays are numbered 1..N, counterclockwise around each pentadecagon,
/// outermost pentadecagon first.
using RayId = int;

inline constexpr int kOrbitSize = 15;

enum class PolytopeId { Cell600, Cell120, Gosset421 };

/// "600cell", "120cell", "gosset".
std::string_view to_string(PolytopeId id);
/// Accepts the names produced by to_string; throws ParseError otherwise.
PolytopeId parse_polytope(std::string_view name);

/// Number of rays, pentadecagons and basis size expected for each polytope.
struct PolytopeShape {
    int ray_count;
    int pentadecagon_count;
    int dimension;
    int bases_per_ray;
};
PolytopeShape expected_shape(PolytopeId id);

struct Pentadecagon {
    std::string label;
    RayId lo = 0;
    RayId hi = 0;
    double circumradius = 0.0;
    double start_angle_deg = 0.0;

    bool contains(RayId r) const { return r >= lo && r <= hi; }
};

/// The ray-numbering scheme of one polytope: an ordered list of
/// pentadecagons, each owning 15 consecutive ray ids, jointly covering 1..N.
class PentadecagonLayout {
public:
    /// Validates contiguity, 15-ray spans, unique labels and the
    /// polytope's expected ray/pentadecagon counts; throws InconsistentData.
    PentadecagonLayout(PolytopeId polytope, int dimension, std::vector<Pentadecagon> pentadecagons);

    PolytopeId polytope() const { return polytope_; }
    int dimension() const { return dimension_; }
    int ray_count() const { return static_cast<int>(pentadecagons_.size()) * kOrbitSize; }
    int pentadecagon_count() const { return static_cast<int>(pentadecagons_.size()); }
    const std::vector<Pentadecagon>& pentadecagons() const { return pentadecagons_; }
    const Pentadecagon& pentadecagon(int index) const { return pentadecagons_.at(static_cast<std::size_t>(index)); }

    bool contains(RayId r) const { return r >= 1 && r <= ray_count(); }
    /// 0-based index of the pentadecagon holding r; throws DomainError when out of range.
    int pentadecagon_of(RayId r) const;
    /// Wraparound: r advances by `shift` positions within its own pentadecagon.
    RayId shift_ray(RayId r, int shift) const;

private:
    PolytopeId polytope_;
    int dimension_;
    std::vector<Pentadecagon> pentadecagons_;
};

}  // namespace kspoly
