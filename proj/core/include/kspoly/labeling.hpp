#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kspoly/raysystem.hpp"

namespace kspoly {

struct LabelingResult {
    bool found = false;
    /// mapping[i] is the reference ray id assigned to computed ray i + 1.
    std::vector<RayId> mapping;
    std::string failure;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultLabelingBudget = 20'000'000;

/// Finds a bijection of ray ids carrying the computed bases onto the reference
/// bases (hypergraph isomorphism by colour refinement plus backtracking with
/// forward checking on the induced orthogonality graphs). Reports a failure for
/// mismatched counts or when no bijection exists; throws BudgetExceeded when
/// the search expands more than node_budget nodes.
LabelingResult match_labeling(const std::vector<Basis>& computed, std::size_t computed_ray_count,
                              const std::vector<Basis>& reference, std::size_t reference_ray_count,
                              std::uint64_t node_budget = kDefaultLabelingBudget);

LabelingResult match_labeling(const std::vector<Basis>& computed, std::size_t computed_ray_count,
                              const BasisTable& reference, std::uint64_t node_budget = kDefaultLabelingBudget);

/// True if `mapping` carries every computed basis onto a reference basis and is a bijection.
bool verify_labeling(const std::vector<Basis>& computed, const std::vector<Basis>& reference,
                     const std::vector<RayId>& mapping);

}  // namespace kspoly
