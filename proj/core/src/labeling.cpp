#include "kspoly/labeling.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kspoly/bitmatrix.hpp"
#include "kspoly/error.hpp"

namespace kspoly {

namespace {

struct Hypergraph {
    std::size_t n = 0;
    std::vector<BitVector> adjacency;
    std::vector<int> occurrences;
};

Hypergraph build(const std::vector<Basis>& bases, std::size_t n) {
    Hypergraph h{n, std::vector<BitVector>(n, BitVector(n)), std::vector<int>(n, 0)};
    for (const auto& b : bases) {
        const auto& r = b.rays();
        for (RayId x : r) {
            if (x < 1 || static_cast<std::size_t>(x) > n) throw DomainError("basis ray outside the declared ray count");
            ++h.occurrences[static_cast<std::size_t>(x - 1)];
        }
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i + 1; j < r.size(); ++j) {
                h.adjacency[static_cast<std::size_t>(r[i] - 1)].set(static_cast<std::size_t>(r[j] - 1));
                h.adjacency[static_cast<std::size_t>(r[j] - 1)].set(static_cast<std::size_t>(r[i] - 1));
            }
    }
    return h;
}

// Joint colour refinement so that colours are comparable across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const Hypergraph& a, const Hypergraph& b) {
    auto initial = [](const Hypergraph& h) {
        std::vector<std::vector<int>> sig(h.n);
        for (std::size_t v = 0; v < h.n; ++v) sig[v] = {h.occurrences[v], static_cast<int>(h.adjacency[v].weight())};
        return sig;
    };
    std::vector<std::vector<int>> sa = initial(a), sb = initial(b);
    std::vector<int> ca, cb;
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<int>, int> ids;
        for (const auto& s : sa) ids.emplace(s, 0);
        for (const auto& s : sb) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        ca.assign(a.n, 0);
        cb.assign(b.n, 0);
        for (std::size_t v = 0; v < a.n; ++v) ca[v] = ids[sa[v]];
        for (std::size_t v = 0; v < b.n; ++v) cb[v] = ids[sb[v]];
        if (ids.size() == classes) break;
        classes = ids.size();
        auto step = [](const Hypergraph& h, const std::vector<int>& c) {
            std::vector<std::vector<int>> sig(h.n);
            for (std::size_t v = 0; v < h.n; ++v) {
                std::vector<int> nb;
                for (auto u : h.adjacency[v].support()) nb.push_back(c[u]);
                std::sort(nb.begin(), nb.end());
                sig[v] = {c[v]};
                sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            }
            return sig;
        };
        sa = step(a, ca);
        sb = step(b, cb);
    }
    return {ca, cb};
}

class Matcher {
public:
    Matcher(const Hypergraph& a, const Hypergraph& b, const std::vector<Basis>& computed,
            const std::set<Basis>& reference, std::uint64_t budget)
        : a_(a), b_(b), computed_(computed), reference_(reference), budget_(budget), mapping_(a.n, -1) {}

    bool run(std::vector<BitVector> domains) { return search(std::move(domains), 0); }
    const std::vector<int>& mapping() const { return mapping_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool bases_map() const {
        for (const auto& basis : computed_) {
            std::vector<RayId> image;
            for (RayId r : basis.rays()) image.push_back(mapping_[static_cast<std::size_t>(r - 1)] + 1);
            if (!reference_.count(Basis(std::move(image)))) return false;
        }
        return true;
    }

    bool search(std::vector<BitVector> domains, std::size_t assigned) {
        if (++nodes_ > budget_) throw BudgetExceeded("labeling search exceeded " + std::to_string(budget_) + " nodes");
        if (assigned == a_.n) return bases_map();
        std::size_t pick = a_.n;
        std::size_t smallest = 0;
        for (std::size_t v = 0; v < a_.n; ++v) {
            if (mapping_[v] >= 0) continue;
            const auto size = domains[v].weight();
            if (size == 0) return false;
            if (pick == a_.n || size < smallest) {
                pick = v;
                smallest = size;
            }
        }
        for (auto target : domains[pick].support()) {
            mapping_[pick] = static_cast<int>(target);
            std::vector<BitVector> next = domains;
            bool ok = true;
            for (std::size_t v = 0; v < a_.n && ok; ++v) {
                if (mapping_[v] >= 0) continue;
                next[v].set(target, false);
                if (a_.adjacency[pick].test(v))
                    next[v] = next[v] & b_.adjacency[target];
                else
                    for (auto u : (next[v] & b_.adjacency[target]).support()) next[v].set(u, false);
                ok = next[v].any();
            }
            if (ok && search(std::move(next), assigned + 1)) return true;
            mapping_[pick] = -1;
        }
        return false;
    }

    const Hypergraph& a_;
    const Hypergraph& b_;
    const std::vector<Basis>& computed_;
    const std::set<Basis>& reference_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> mapping_;
};

}  // namespace

LabelingResult match_labeling(const std::vector<Basis>& computed, std::size_t computed_ray_count,
                              const std::vector<Basis>& reference, std::size_t reference_ray_count,
                              std::uint64_t node_budget) {
    LabelingResult result;
    if (computed_ray_count != reference_ray_count) {
        result.failure = "ray counts differ: " + std::to_string(computed_ray_count) + " vs " +
                         std::to_string(reference_ray_count);
        return result;
    }
    if (computed.size() != reference.size()) {
        result.failure = "basis counts differ: " + std::to_string(computed.size()) + " vs " +
                         std::to_string(reference.size());
        return result;
    }
    const std::set<Basis> reference_set(reference.begin(), reference.end());
    if (reference_set.size() != reference.size()) {
        result.failure = "reference repeats a basis";
        return result;
    }

    const auto a = build(computed, computed_ray_count);
    const auto b = build(reference, reference_ray_count);
    const auto [ca, cb] = refine(a, b);
    std::map<int, std::size_t> count_a, count_b;
    for (int c : ca) ++count_a[c];
    for (int c : cb) ++count_b[c];
    if (count_a != count_b) {
        result.failure = "colour refinement separates the two systems";
        return result;
    }

    std::vector<BitVector> domains(a.n, BitVector(b.n));
    for (std::size_t v = 0; v < a.n; ++v)
        for (std::size_t u = 0; u < b.n; ++u)
            if (ca[v] == cb[u]) domains[v].set(u);

    Matcher m(a, b, computed, reference_set, node_budget);
    const bool found = m.run(std::move(domains));
    result.nodes = m.nodes();
    if (!found) {
        result.failure = "no bijection carries the computed bases onto the reference";
        return result;
    }
    result.found = true;
    for (int t : m.mapping()) result.mapping.push_back(t + 1);
    return result;
}

LabelingResult match_labeling(const std::vector<Basis>& computed, std::size_t computed_ray_count,
                              const BasisTable& reference, std::uint64_t node_budget) {
    return match_labeling(computed, computed_ray_count, reference.bases(),
                          static_cast<std::size_t>(reference.layout().ray_count()), node_budget);
}

bool verify_labeling(const std::vector<Basis>& computed, const std::vector<Basis>& reference,
                     const std::vector<RayId>& mapping) {
    if (computed.size() != reference.size()) return false;
    std::set<RayId> images(mapping.begin(), mapping.end());
    if (images.size() != mapping.size()) return false;
    for (RayId r : mapping)
        if (r < 1 || static_cast<std::size_t>(r) > mapping.size()) return false;
    const std::set<Basis> reference_set(reference.begin(), reference.end());
    std::set<Basis> seen;
    for (const auto& basis : computed) {
        std::vector<RayId> image;
        for (RayId r : basis.rays()) {
            if (r < 1 || static_cast<std::size_t>(r) > mapping.size()) return false;
            image.push_back(mapping[static_cast<std::size_t>(r - 1)]);
        }
        Basis mapped(std::move(image));
        if (!reference_set.count(mapped) || !seen.insert(mapped).second) return false;
    }
    return true;
}

}  // namespace kspoly
