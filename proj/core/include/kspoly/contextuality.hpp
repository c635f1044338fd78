#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "kspoly/raysystem.hpp"

namespace kspoly {

/// A selection of bases from a basis table. Indices are 0-based into the
/// table and kept ascending, so local position i (1-based) inside the proof
/// follows generator-major, shift-minor order.
class Proof {
public:
    /// Throws DomainError on out-of-range or repeated indices.
    Proof(const BasisTable& table, std::vector<std::size_t> basis_indices);

    const BasisTable& table() const { return *table_; }
    const std::vector<std::size_t>& basis_indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    std::vector<Basis> bases() const;

private:
    const BasisTable* table_;
    std::vector<std::size_t> indices_;
};

Proof proof_from_word(const BasisTable& table, const Word& w);

struct ParityCertificate {
    bool valid = false;
    std::size_t basis_count = 0;
    std::map<RayId, int> ray_occurrences;
    /// Rays occurring an odd number of times.
    std::vector<RayId> offending_rays;
    bool odd_basis_count = false;
};

ParityCertificate verify_parity_proof(std::span<const Basis> bases);
ParityCertificate verify_parity_proof(const Proof& p);

/// Value 0/1 per ray that occurs in the examined bases.
struct Assignment {
    std::map<RayId, int> values;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Exhaustive backtracking for an assignment with exactly one 1 per basis,
/// branching on the basis with the fewest undecided rays. Returns nullopt
/// when none exists; throws BudgetExceeded when more than node_budget nodes
/// would be expanded.
std::optional<Assignment> find_ks_assignment(std::span<const Basis> bases,
                                            std::uint64_t node_budget = kDefaultNodeBudget);

/// True if every basis has exactly one ray set to 1 and all rays are assigned.
bool is_valid_assignment(std::span<const Basis> bases, const Assignment& a);

struct SubProof {
    std::vector<std::size_t> positions;      ///< 1-based positions inside the parent proof
    std::vector<std::size_t> basis_indices;  ///< 0-based indices into the table
    RayBasisSymbol symbol;
};

struct DecompositionLimits {
    std::size_t max_nullity = 25;
    std::size_t max_reported = 10'000;
};

struct Decomposition {
    std::size_t nullity = 0;
    /// Sorted by basis count, then lexicographically by positions.
    std::vector<SubProof> proofs;
    /// Total odd-weight vectors found; may exceed proofs.size() when truncated.
    std::uint64_t total_found = 0;
    bool truncated = false;
};

/// Every odd-weight vector of the GF(2) nullspace of the ray x basis incidence
/// matrix restricted to p's bases. Includes p itself when p is a parity proof.
/// Throws BudgetExceeded when the nullity exceeds limits.max_nullity.
Decomposition incidence_nullspace_proofs(const Proof& p, const DecompositionLimits& limits = {});

/// True iff the only parity proof among p's bases is p itself.
bool is_irreducible(const Proof& p, const DecompositionLimits& limits = {});

enum class DecompositionKind { DirectSum, Overlapping };

/// Sub-proofs with the fewest bases among those strictly smaller than p.
std::vector<SubProof> smallest_components(const Proof& p, const std::vector<SubProof>& subs);

/// DirectSum iff some subset of the smallest proper sub-proofs partitions p's
/// bases (trivially DirectSum when p has no proper sub-proof).
DecompositionKind classify_decomposition(const Proof& p, const std::vector<SubProof>& subs);

}  // namespace kspoly
