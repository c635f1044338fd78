#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kspoly/golden.hpp"

namespace kspoly {

struct RigidityClaim {
    std::string description;
    bool expected = false;
    bool observed = false;

    bool pass() const { return expected == observed; }
};

struct RigidityReport {
    std::vector<GoldenVector4> vectors;  ///< v1..v6
    std::vector<IntVector8> images;      ///< phi(v1)..phi(v6)
    std::vector<RigidityClaim> claims;

    bool all_pass() const;
};

/// Six icosian vectors whose phi images in Z^8 keep every orthogonality of
/// the 600-cell but gain new ones: v1 = (2,0,0,0), v2 = (0,a,1,b),
/// v3 = (0,1,b,a), v4 = (0,b,a,1), v5 = (0,a,1,-b), v6 = (a,b,1,0).
RigidityReport rigidity_demo();

/// Orthogonality under phi over all pairs of 600-cell rays.
struct PhiOrthogonalityReport {
    std::size_t pairs = 0;
    std::size_t h4_orthogonal = 0;
    std::size_t preserved = 0;          ///< H4-orthogonal pairs still orthogonal after phi
    std::size_t gained = 0;             ///< orthogonal after phi only
    std::optional<std::pair<std::size_t, std::size_t>> gained_witness;  ///< 1-based ray ids
};

PhiOrthogonalityReport check_phi_orthogonality();

}  // namespace kspoly
