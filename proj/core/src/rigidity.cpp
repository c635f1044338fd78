#include "kspoly/rigidity.hpp"

#include <algorithm>

#include "kspoly/geometry.hpp"

namespace kspoly {

bool RigidityReport::all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const RigidityClaim& c) { return c.pass(); });
}

RigidityReport rigidity_demo() {
    const GoldenInt a = GoldenInt::alpha(), b = GoldenInt::beta(), one{1}, zero{0}, two{2};
    RigidityReport report;
    report.vectors = {
        {two, zero, zero, zero}, {zero, a, one, b},  {zero, one, b, a},
        {zero, b, a, one},       {zero, a, one, -b}, {a, b, one, zero},
    };
    for (const auto& v : report.vectors) report.images.push_back(phi_map(v));

    const std::vector<IntVector8> expected_images = {
        {2, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 1, 0, -1}, {0, 1, 1, 0, 0, 0, -1, 1},
        {0, 1, 0, 1, 0, -1, 1, 0}, {0, 0, 1, -1, 0, 1, 0, 1}, {0, 1, 1, 0, 1, -1, 0, 0},
    };
    const auto vertices = icosian_600cell_vertices();

    auto name = [](std::size_t i) { return "v" + std::to_string(i + 1); };
    for (std::size_t i = 0; i < report.vectors.size(); ++i) {
        report.claims.push_back({name(i) + " is a vertex of H4a", true,
                                 std::binary_search(vertices.begin(), vertices.end(), report.vectors[i])});
        report.claims.push_back({"phi(" + name(i) + ") = " + to_string(expected_images[i]), true, report.images[i] == expected_images[i]});
    }
    auto golden_pairs = [&](std::vector<std::size_t> idx, bool expected) {
        for (std::size_t x = 0; x < idx.size(); ++x)
            for (std::size_t y = x + 1; y < idx.size(); ++y) {
                const auto i = idx[x], j = idx[y];
                report.claims.push_back({"<" + name(i) + "," + name(j) + "> = 0", expected,
                                         inner_product(report.vectors[i], report.vectors[j]).is_zero()});
            }
    };
    auto image_pairs = [&](std::vector<std::size_t> idx) {
        for (std::size_t x = 0; x < idx.size(); ++x)
            for (std::size_t y = x + 1; y < idx.size(); ++y) {
                const auto i = idx[x], j = idx[y];
                report.claims.push_back({"<phi(" + name(i) + "),phi(" + name(j) + ")> = 0", true,
                                         inner_product(report.images[i], report.images[j]) == 0});
            }
    };
    golden_pairs({0, 1, 2, 3}, true);
    image_pairs({0, 1, 2, 3});
    image_pairs({0, 1, 4, 5});
    golden_pairs({0, 5}, false);
    golden_pairs({1, 4}, false);
    return report;
}

PhiOrthogonalityReport check_phi_orthogonality() {
    const auto rays = icosian_600cell();
    std::vector<IntVector8> images;
    for (const auto& v : rays.vectors) images.push_back(phi_map(v));
    PhiOrthogonalityReport r;
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            ++r.pairs;
            const bool h4 = inner_product(rays.vectors[i], rays.vectors[j]).is_zero();
            const bool e8 = inner_product(images[i], images[j]) == 0;
            if (h4) ++r.h4_orthogonal;
            if (h4 && e8) ++r.preserved;
            if (!h4 && e8) {
                ++r.gained;
                if (!r.gained_witness) r.gained_witness = std::pair{i + 1, j + 1};
            }
        }
    return r;
}

}  // namespace kspoly
