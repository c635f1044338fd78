#include "kspoly/contextuality.hpp"

#include <algorithm>
#include <bit>

#include "kspoly/bitmatrix.hpp"
#include "kspoly/error.hpp"
#include "kspoly/gf2code.hpp"

namespace kspoly {

Proof::Proof(const BasisTable& table, std::vector<std::size_t> basis_indices)
    : table_(&table), indices_(std::move(basis_indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw DomainError("proof repeats a basis index");
    if (!indices_.empty() && indices_.back() >= table.size())
        throw DomainError("basis index " + std::to_string(indices_.back()) + " outside the table");
}

std::vector<Basis> Proof::bases() const {
    std::vector<Basis> out;
    out.reserve(indices_.size());
    for (auto i : indices_) out.push_back(table_->basis(i));
    return out;
}

Proof proof_from_word(const BasisTable& table, const Word& w) { return Proof(table, word_to_bases(w, table)); }

ParityCertificate verify_parity_proof(std::span<const Basis> bases) {
    ParityCertificate c;
    c.basis_count = bases.size();
    for (const auto& b : bases)
        for (RayId r : b.rays()) ++c.ray_occurrences[r];
    for (const auto& [ray, count] : c.ray_occurrences)
        if (count % 2 != 0) c.offending_rays.push_back(ray);
    c.odd_basis_count = bases.size() % 2 == 1;
    c.valid = c.odd_basis_count && c.offending_rays.empty();
    return c;
}

ParityCertificate verify_parity_proof(const Proof& p) {
    const auto bases = p.bases();
    return verify_parity_proof(bases);
}

// ---------------------------------------------------------------------------

namespace {

class AssignmentSearch {
public:
    AssignmentSearch(std::span<const Basis> bases, std::uint64_t budget) : budget_(budget) {
        for (const auto& b : bases)
            for (RayId r : b.rays()) rays_.push_back(r);
        std::sort(rays_.begin(), rays_.end());
        rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
        members_.resize(bases.size());
        bases_of_.resize(rays_.size());
        for (std::size_t b = 0; b < bases.size(); ++b) {
            for (RayId r : bases[b].rays()) {
                const auto idx = static_cast<std::size_t>(std::lower_bound(rays_.begin(), rays_.end(), r) - rays_.begin());
                members_[b].push_back(idx);
                bases_of_[idx].push_back(b);
            }
        }
        value_.assign(rays_.size(), -1);
        ones_.assign(bases.size(), 0);
        undecided_.resize(bases.size());
        for (std::size_t b = 0; b < bases.size(); ++b) undecided_[b] = static_cast<int>(members_[b].size());
    }

    std::optional<Assignment> run() {
        if (!search()) return std::nullopt;
        Assignment a;
        for (std::size_t i = 0; i < rays_.size(); ++i) a.values[rays_[i]] = value_[i] == 1 ? 1 : 0;
        return a;
    }

private:
    void assign(std::size_t r, int v) {
        value_[r] = v;
        for (auto b : bases_of_[r]) {
            --undecided_[b];
            if (v == 1) ++ones_[b];
        }
        trail_.push_back(r);
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const auto r = trail_.back();
            trail_.pop_back();
            for (auto b : bases_of_[r]) {
                ++undecided_[b];
                if (value_[r] == 1) --ones_[b];
            }
            value_[r] = -1;
        }
    }

    // Sets r to 1 and every undecided ray sharing a basis with it to 0.
    bool set_one(std::size_t r) {
        assign(r, 1);
        for (auto b : bases_of_[r])
            for (auto q : members_[b])
                if (value_[q] == -1) assign(q, 0);
        for (auto b : bases_of_[r])
            for (auto q : members_[b])
                for (auto c : bases_of_[q])
                    if (ones_[c] == 0 && undecided_[c] == 0) return false;
        return true;
    }

    bool search() {
        if (++nodes_ > budget_)
            throw BudgetExceeded("assignment search exceeded " + std::to_string(budget_) + " nodes");
        std::size_t best = members_.size();
        for (std::size_t b = 0; b < members_.size(); ++b) {
            if (ones_[b] != 0) continue;
            if (undecided_[b] == 0) return false;
            if (best == members_.size() || undecided_[b] < undecided_[best]) best = b;
        }
        if (best == members_.size()) return true;
        const std::size_t mark = trail_.size();
        for (auto r : members_[best]) {
            if (value_[r] != -1) continue;
            if (set_one(r) && search()) return true;
            undo(mark);
        }
        return false;
    }

    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<RayId> rays_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::vector<std::size_t>> bases_of_;
    std::vector<int> value_;
    std::vector<int> ones_;
    std::vector<int> undecided_;
    std::vector<std::size_t> trail_;
};

}  // namespace

std::optional<Assignment> find_ks_assignment(std::span<const Basis> bases, std::uint64_t node_budget) {
    return AssignmentSearch(bases, node_budget).run();
}

bool is_valid_assignment(std::span<const Basis> bases, const Assignment& a) {
    std::size_t rays_seen = 0;
    std::map<RayId, bool> seen;
    for (const auto& b : bases) {
        int ones = 0;
        for (RayId r : b.rays()) {
            auto it = a.values.find(r);
            if (it == a.values.end() || (it->second != 0 && it->second != 1)) return false;
            ones += it->second;
            if (!seen[r]) {
                seen[r] = true;
                ++rays_seen;
            }
        }
        if (ones != 1) return false;
    }
    return rays_seen == a.values.size();
}

// ---------------------------------------------------------------------------

namespace {

bool subproof_less(const SubProof& a, const SubProof& b) {
    if (a.positions.size() != b.positions.size()) return a.positions.size() < b.positions.size();
    return a.positions < b.positions;
}

}  // namespace

Decomposition incidence_nullspace_proofs(const Proof& p, const DecompositionLimits& limits) {
    const auto bases = p.bases();
    std::vector<RayId> rays;
    for (const auto& b : bases)
        for (RayId r : b.rays()) rays.push_back(r);
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    BitMatrix incidence(rays.size(), bases.size());
    for (std::size_t j = 0; j < bases.size(); ++j)
        for (RayId r : bases[j].rays())
            incidence.set(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()), j);

    const auto code = gf2_nullspace(incidence);
    Decomposition out;
    out.nullity = code.k;
    if (code.k > limits.max_nullity)
        throw BudgetExceeded("incidence nullity " + std::to_string(code.k) + " exceeds the limit " +
                             std::to_string(limits.max_nullity));

    std::vector<std::vector<std::size_t>> found;
    auto prune = [&] {
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        if (found.size() > limits.max_reported) found.resize(limits.max_reported);
    };
    BitVector cur(bases.size());
    const std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= code.nullspace_basis[static_cast<std::size_t>(std::countr_zero(i))];
        if (cur.weight() % 2 == 0) continue;
        ++out.total_found;
        found.push_back(cur.support());
        if (found.size() >= 2 * limits.max_reported + 1) prune();
    }
    prune();
    out.truncated = out.total_found > found.size();

    for (auto& support : found) {
        SubProof s;
        std::vector<Basis> sub;
        for (auto j : support) {
            s.positions.push_back(j + 1);
            s.basis_indices.push_back(p.basis_indices()[j]);
            sub.push_back(bases[j]);
        }
        s.symbol = ray_basis_symbol(sub);
        out.proofs.push_back(std::move(s));
    }
    std::sort(out.proofs.begin(), out.proofs.end(), subproof_less);
    return out;
}

bool is_irreducible(const Proof& p, const DecompositionLimits& limits) {
    const auto d = incidence_nullspace_proofs(p, limits);
    return d.total_found == 1 && d.proofs.front().positions.size() == p.size();
}

std::vector<SubProof> smallest_components(const Proof& p, const std::vector<SubProof>& subs) {
    std::size_t best = p.size();
    for (const auto& s : subs)
        if (s.positions.size() < best) best = s.positions.size();
    std::vector<SubProof> out;
    if (best == p.size()) return out;
    for (const auto& s : subs)
        if (s.positions.size() == best) out.push_back(s);
    std::sort(out.begin(), out.end(), subproof_less);
    return out;
}

namespace {

bool exact_cover(const std::vector<BitVector>& parts, BitVector& covered, std::size_t n) {
    std::size_t first = 0;
    while (first < n && covered.test(first)) ++first;
    if (first == n) return true;
    for (const auto& part : parts) {
        if (!part.test(first) || (part & covered).any()) continue;
        covered ^= part;
        if (exact_cover(parts, covered, n)) return true;
        covered ^= part;
    }
    return false;
}

}  // namespace

DecompositionKind classify_decomposition(const Proof& p, const std::vector<SubProof>& subs) {
    const auto components = smallest_components(p, subs);
    if (components.empty()) return DecompositionKind::DirectSum;
    const std::size_t n = p.size();
    std::vector<BitVector> parts;
    for (const auto& c : components) {
        BitVector v(n);
        for (auto pos : c.positions) {
            if (pos < 1 || pos > n) throw DomainError("sub-proof position outside the proof");
            v.set(pos - 1);
        }
        parts.push_back(std::move(v));
    }
    BitVector covered(n);
    return exact_cover(parts, covered, n) ? DecompositionKind::DirectSum : DecompositionKind::Overlapping;
}

}  // namespace kspoly
