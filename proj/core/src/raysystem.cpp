#include "kspoly/raysystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "kspoly/error.hpp"

namespace kspoly {

Basis::Basis(std::vector<RayId> rays) : rays_(std::move(rays)) {
    std::sort(rays_.begin(), rays_.end());
    if (std::adjacent_find(rays_.begin(), rays_.end()) != rays_.end())
        throw DomainError("basis repeats a ray");
    if (!rays_.empty() && rays_.front() < 1) throw DomainError("ray ids start at 1");
}

bool Basis::contains(RayId r) const { return std::binary_search(rays_.begin(), rays_.end(), r); }

void validate_generator(const Generator& gen, const PentadecagonLayout& layout) {
    if (static_cast<int>(gen.basis.size()) != layout.dimension())
        throw DomainError("generator " + gen.label.text() + " has " + std::to_string(gen.basis.size()) +
                          " rays, expected " + std::to_string(layout.dimension()));
    for (RayId r : gen.basis.rays())
        if (!layout.contains(r))
            throw DomainError("generator " + gen.label.text() + " ray " + std::to_string(r) + " out of range");
}

BasisTable::BasisTable(PentadecagonLayout layout, std::vector<Generator> generators, std::vector<Basis> bases,
                       std::vector<BasisOrigin> origins)
    : layout_(std::move(layout)),
      generators_(std::move(generators)),
      bases_(std::move(bases)),
      origins_(std::move(origins)),
      sorted_index_(bases_.size()) {
    if (origins_.size() != bases_.size()) throw InconsistentData("origin map does not cover every basis");
    std::iota(sorted_index_.begin(), sorted_index_.end(), std::size_t{0});
    std::sort(sorted_index_.begin(), sorted_index_.end(),
              [this](std::size_t a, std::size_t b) { return bases_[a] < bases_[b]; });
}

std::optional<std::size_t> BasisTable::find_generator(const Letter& l) const {
    for (std::size_t g = 0; g < generators_.size(); ++g)
        if (generators_[g].label == l) return g;
    return std::nullopt;
}

std::size_t BasisTable::generator_index(const Letter& l) const {
    if (auto g = find_generator(l)) return *g;
    throw DomainError("unknown letter " + l.text() + " for " + std::string(to_string(layout_.polytope())));
}

std::optional<std::size_t> BasisTable::find(const Basis& b) const {
    auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), b,
                               [this](std::size_t i, const Basis& key) { return bases_[i] < key; });
    if (it != sorted_index_.end() && bases_[*it] == b) return *it;
    return std::nullopt;
}

ProfileMatrix::ProfileMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows_ * cols_))
        throw DomainError("profile matrix entries do not match its shape");
}

std::vector<int> ProfileMatrix::column(int col) const {
    std::vector<int> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = at(i, col);
    return out;
}

int RayBasisSymbol::total_rays() const {
    int t = 0;
    for (const auto& term : ray_terms) t += term.ray_count;
    return t;
}

std::string RayBasisSymbol::text() const {
    std::string out;
    for (const auto& t : ray_terms) {
        if (!out.empty()) out += ' ';
        out += std::to_string(t.ray_count) + "_" + std::to_string(t.multiplicity);
    }
    out += " - " + std::to_string(basis_count) + "_" + std::to_string(basis_size);
    return out;
}

RayBasisSymbol parse_symbol(std::string_view text) {
    auto fail = [&] { return ParseError("malformed ray-basis symbol '" + std::string(text) + "'"); };
    const auto dash = text.find('-');
    if (dash == std::string_view::npos) throw fail();
    auto parse_term = [&](std::string_view tok) {
        const auto us = tok.find('_');
        if (us == std::string_view::npos || us == 0 || us + 1 == tok.size()) throw fail();
        int a = 0, b = 0;
        for (char c : tok.substr(0, us)) {
            if (c < '0' || c > '9') throw fail();
            a = a * 10 + (c - '0');
        }
        for (char c : tok.substr(us + 1)) {
            if (c < '0' || c > '9') throw fail();
            b = b * 10 + (c - '0');
        }
        return std::pair{a, b};
    };
    RayBasisSymbol s;
    std::istringstream left{std::string(text.substr(0, dash))};
    std::string tok;
    while (left >> tok) {
        auto [count, mult] = parse_term(tok);
        s.ray_terms.push_back({mult, count});
    }
    std::istringstream right{std::string(text.substr(dash + 1))};
    if (!(right >> tok)) throw fail();
    auto [bc, bs] = parse_term(tok);
    if (right >> tok) throw fail();
    s.basis_count = bc;
    s.basis_size = bs;
    if (s.ray_terms.empty()) throw fail();
    std::sort(s.ray_terms.begin(), s.ray_terms.end(),
              [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
    return s;
}

Basis expand_orbit(const Generator& gen, const PentadecagonLayout& layout, int shift) {
    std::vector<RayId> rays;
    rays.reserve(gen.basis.size());
    for (RayId r : gen.basis.rays()) rays.push_back(layout.shift_ray(r, shift));
    return Basis(std::move(rays));
}

BasisTable build_basis_table(const PentadecagonLayout& layout, const std::vector<Generator>& generators) {
    if (generators.empty()) throw DomainError("no generators");
    std::set<Letter> labels;
    for (const auto& g : generators) {
        validate_generator(g, layout);
        if (!labels.insert(g.label).second) throw DomainError("duplicate generator label " + g.label.text());
    }

    std::vector<Basis> bases;
    std::vector<BasisOrigin> origins;
    bases.reserve(generators.size() * kOrbitSize);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        for (int s = 0; s < kOrbitSize; ++s) {
            bases.push_back(expand_orbit(generators[g], layout, s));
            origins.push_back({g, s});
        }
    }

    std::vector<Basis> sorted = bases;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
        std::string rays;
        for (RayId r : it->rays()) rays += " " + std::to_string(r);
        throw InconsistentData("duplicate basis {" + rays + " } across orbits");
    }

    // Every ray that occurs must occur equally often.
    std::vector<int> occurrences(static_cast<std::size_t>(layout.ray_count()) + 1, 0);
    for (const auto& b : bases)
        for (RayId r : b.rays()) ++occurrences[static_cast<std::size_t>(r)];
    int common = 0;
    for (RayId r = 1; r <= layout.ray_count(); ++r) {
        const int c = occurrences[static_cast<std::size_t>(r)];
        if (c == 0) continue;
        if (common == 0) common = c;
        if (c != common)
            throw InconsistentData("non-uniform ray occurrence: ray " + std::to_string(r) + " occurs " +
                                   std::to_string(c) + " times, others " + std::to_string(common));
    }

    return BasisTable(layout, generators, std::move(bases), std::move(origins));
}

std::string basis_profile(const Basis& b, const PentadecagonLayout& layout) {
    std::vector<int> idx;
    for (RayId r : b.rays()) idx.push_back(layout.pentadecagon_of(r));
    std::sort(idx.begin(), idx.end());
    std::string out;
    for (int i : idx) out += layout.pentadecagon(i).label;
    return out;
}

ProfileMatrix build_profile_matrix(const PentadecagonLayout& layout, const std::vector<Generator>& generators) {
    const int rows = layout.pentadecagon_count();
    const int cols = static_cast<int>(generators.size());
    std::vector<int> entries(static_cast<std::size_t>(rows * cols), 0);
    for (int j = 0; j < cols; ++j) {
        validate_generator(generators[static_cast<std::size_t>(j)], layout);
        for (RayId r : generators[static_cast<std::size_t>(j)].basis.rays())
            ++entries[static_cast<std::size_t>(layout.pentadecagon_of(r) * cols + j)];
    }
    return ProfileMatrix(rows, cols, std::move(entries));
}

Word bind_word(const Word& w, const std::vector<Generator>& generators, PolytopeId polytope) {
    if (w.polytope() && *w.polytope() != polytope)
        throw DomainError("word belongs to " + std::string(to_string(*w.polytope())));
    for (const auto& l : w.letters()) {
        const bool known = std::any_of(generators.begin(), generators.end(),
                                       [&](const Generator& g) { return g.label == l; });
        if (!known) throw DomainError("unknown letter " + l.text() + " for " + std::string(to_string(polytope)));
    }
    return w.with_polytope(polytope);
}

std::vector<std::size_t> word_to_bases(const Word& w, const BasisTable& table) {
    std::vector<std::size_t> out;
    out.reserve(w.size() * kOrbitSize);
    for (const auto& l : w.letters()) {
        const std::size_t g = table.generator_index(l);
        for (int s = 0; s < kOrbitSize; ++s) out.push_back(g * kOrbitSize + static_cast<std::size_t>(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

RayBasisSymbol symbol_from_counts(const std::map<RayId, int>& counts, int basis_count, int basis_size) {
    std::map<int, int> by_multiplicity;
    for (const auto& [ray, c] : counts) ++by_multiplicity[c];
    RayBasisSymbol s;
    for (const auto& [mult, n] : by_multiplicity) s.ray_terms.push_back({mult, n});
    s.basis_count = basis_count;
    s.basis_size = basis_size;
    return s;
}

}  // namespace

RayBasisSymbol ray_basis_symbol(std::span<const Basis> bases) {
    if (bases.empty()) throw DomainError("ray-basis symbol of an empty basis set");
    const std::size_t d = bases.front().size();
    std::map<RayId, int> counts;
    for (const auto& b : bases) {
        if (b.size() != d) throw DomainError("bases of different sizes");
        for (RayId r : b.rays()) ++counts[r];
    }
    return symbol_from_counts(counts, static_cast<int>(bases.size()), static_cast<int>(d));
}

RayBasisSymbol ray_basis_symbol(const BasisTable& table, std::span<const std::size_t> indices) {
    std::vector<Basis> bases;
    bases.reserve(indices.size());
    for (auto i : indices) bases.push_back(table.basis(i));
    return ray_basis_symbol(bases);
}

namespace {

std::vector<int> pentadecagon_totals(const Word& w, const std::vector<Generator>& generators,
                                     const PentadecagonLayout& layout) {
    std::vector<int> totals(static_cast<std::size_t>(layout.pentadecagon_count()), 0);
    for (const auto& l : w.letters()) {
        auto it = std::find_if(generators.begin(), generators.end(), [&](const Generator& g) { return g.label == l; });
        if (it == generators.end()) throw DomainError("unknown letter " + l.text());
        for (RayId r : it->basis.rays()) ++totals[static_cast<std::size_t>(layout.pentadecagon_of(r))];
    }
    return totals;
}

}  // namespace

RayBasisSymbol symbol_from_word(const Word& w, const std::vector<Generator>& generators,
                                const PentadecagonLayout& layout) {
    if (w.empty()) throw DomainError("ray-basis symbol of the empty word");
    const auto totals = pentadecagon_totals(w, generators, layout);
    std::map<int, int> by_multiplicity;
    for (int t : totals)
        if (t > 0) by_multiplicity[t] += kOrbitSize;
    RayBasisSymbol s;
    for (const auto& [mult, n] : by_multiplicity) s.ray_terms.push_back({mult, n});
    s.basis_count = kOrbitSize * static_cast<int>(w.size());
    s.basis_size = layout.dimension();
    return s;
}

std::string pentadecagon_counts(const Word& w, const std::vector<Generator>& generators,
                                const PentadecagonLayout& layout) {
    const auto totals = pentadecagon_totals(w, generators, layout);
    std::map<int, std::string> groups;
    for (std::size_t i = 0; i < totals.size(); ++i)
        if (totals[i] > 0) groups[totals[i]] += layout.pentadecagon(static_cast<int>(i)).label;
    std::string out;
    for (const auto& [mult, labels] : groups) {
        if (!out.empty()) out += ' ';
        out += "(" + labels + ")_" + std::to_string(mult);
    }
    return out;
}

}  // namespace kspoly
