#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kspoly/geometry.hpp"

namespace kspoly {

struct ProjectedRay {
    RayId ray = 0;  ///< id in the projected ray set
    double radius = 0.0;
    double angle_deg = 0.0;  ///< of the representative kept on the pentadecagon, in [0, 360), congruent to [0, 12) mod 24
};

/// Fifteen rays on one circle.
struct ProjectionRing {
    double radius = 0.0;
    double start_angle_deg = 0.0;  ///< smallest kept angle, in [0, 12)
    std::vector<RayId> rays;       ///< counterclockwise from start_angle_deg
    double max_spacing_error_deg = 0.0;
};

struct CoxeterProjection {
    std::vector<ProjectedRay> rays;  ///< indexed by ray id - 1
    std::vector<ProjectionRing> rings;  ///< by decreasing radius, then increasing start angle
    std::size_t simple_root_count = 0;
};

/// Projects onto the plane on which a Coxeter element (product of the simple
/// reflections of `roots`) rotates by 2*pi/30. For each ray, the sign of the
/// representative is chosen so that each 30-gon keeps alternate vertices;
/// radii are normalized to a maximum of 1. Throws InconsistentData if the
/// eigenplane cannot be isolated.
CoxeterProjection coxeter_projection(const std::vector<std::vector<double>>& rays,
                                     const std::vector<std::vector<double>>& roots);

/// The ray set doubles as its own root system (600-cell, E8).
CoxeterProjection coxeter_projection(const GoldenRaySet& rs);
CoxeterProjection coxeter_projection(const IntRaySet& rs);
/// 120-cell rays projected with the icosian 600-cell's H4 roots.
CoxeterProjection coxeter_projection(const GoldenRaySet& rs, const GoldenRaySet& root_rays);

/// "ray,radius,angle_deg" lines.
std::string projection_csv(const CoxeterProjection& p);

}  // namespace kspoly
