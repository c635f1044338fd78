#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kspoly/layout.hpp"
#include "kspoly/word.hpp"

namespace kspoly {

/// A set of d mutually orthogonal rays, stored sorted. Equality is set equality.
class Basis {
public:
    Basis() = default;
    /// Sorts the rays; throws DomainError on repeats or non-positive ids.
    explicit Basis(std::vector<RayId> rays);

    const std::vector<RayId>& rays() const { return rays_; }
    std::size_t size() const { return rays_.size(); }
    bool contains(RayId r) const;

    friend bool operator==(const Basis&, const Basis&) = default;
    friend auto operator<=>(const Basis&, const Basis&) = default;

private:
    std::vector<RayId> rays_;
};

/// Representative basis of one fifteen-fold orbit.
struct Generator {
    Letter label;
    Basis basis;
};

/// Checks every ray lies in the layout and the generator has exactly d rays.
void validate_generator(const Generator& gen, const PentadecagonLayout& layout);

struct BasisOrigin {
    std::size_t generator = 0;  ///< index into BasisTable::generators()
    int shift = 0;              ///< 0..14
};

/// All bases of a polytope in generator-major, shift-minor order
/// (basis 15*g + s is generator g advanced by s).
class BasisTable {
public:
    BasisTable(PentadecagonLayout layout, std::vector<Generator> generators, std::vector<Basis> bases,
               std::vector<BasisOrigin> origins);

    const PentadecagonLayout& layout() const { return layout_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Basis>& bases() const { return bases_; }
    const Basis& basis(std::size_t i) const { return bases_.at(i); }
    const BasisOrigin& origin(std::size_t i) const { return origins_.at(i); }
    std::size_t size() const { return bases_.size(); }

    /// Index of the generator labelled `l`; throws DomainError if absent.
    std::size_t generator_index(const Letter& l) const;
    std::optional<std::size_t> find_generator(const Letter& l) const;
    /// Index of an identical basis, if the table holds one.
    std::optional<std::size_t> find(const Basis& b) const;

private:
    PentadecagonLayout layout_;
    std::vector<Generator> generators_;
    std::vector<Basis> bases_;
    std::vector<BasisOrigin> origins_;
    std::vector<std::size_t> sorted_index_;
};

/// Entry (i, j) counts how often pentadecagon i appears in the profile of generator j.
class ProfileMatrix {
public:
    ProfileMatrix(int rows, int cols, std::vector<int> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int row, int col) const { return entries_[static_cast<std::size_t>(row * cols_ + col)]; }
    std::vector<int> column(int col) const;

private:
    int rows_;
    int cols_;
    std::vector<int> entries_;
};

/// Ray-basis symbol such as 150_2 30_4 - 105_4: ray_count rays occurring
/// `multiplicity` times each, over basis_count bases of basis_size rays.
struct RayBasisSymbol {
    struct Term {
        int multiplicity = 0;
        int ray_count = 0;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> ray_terms;  ///< sorted by multiplicity
    int basis_count = 0;
    int basis_size = 0;

    int total_rays() const;
    /// "150_2 30_4 - 105_4"
    std::string text() const;
    friend bool operator==(const RayBasisSymbol&, const RayBasisSymbol&) = default;
};

/// Parses the text() form back; throws ParseError.
RayBasisSymbol parse_symbol(std::string_view text);

/// Applies wraparound to every ray; shift is taken modulo 15.
Basis expand_orbit(const Generator& gen, const PentadecagonLayout& layout, int shift);

/// Throws InconsistentData on duplicate bases or non-uniform ray occurrence,
/// DomainError on invalid generators or repeated labels.
BasisTable build_basis_table(const PentadecagonLayout& layout, const std::vector<Generator>& generators);

/// Pentadecagon labels of the rays, in layout order, concatenated ("AADD", "AB1K2L").
std::string basis_profile(const Basis& b, const PentadecagonLayout& layout);

ProfileMatrix build_profile_matrix(const PentadecagonLayout& layout, const std::vector<Generator>& generators);

/// Checks every letter names one of the generators and tags the word with the polytope.
Word bind_word(const Word& w, const std::vector<Generator>& generators, PolytopeId polytope);

/// Indices (0-based, ascending) of the 15|w| bases the word selects.
std::vector<std::size_t> word_to_bases(const Word& w, const BasisTable& table);

RayBasisSymbol ray_basis_symbol(std::span<const Basis> bases);
RayBasisSymbol ray_basis_symbol(const BasisTable& table, std::span<const std::size_t> indices);

/// Computed from generator profiles alone, without expanding any orbit.
RayBasisSymbol symbol_from_word(const Word& w, const std::vector<Generator>& generators,
                                const PentadecagonLayout& layout);

/// Pentadecagon groups by occurrence count, e.g. "(B1B2D1D2E2H1I1I2K1K2)_2 (AL)_4".
std::string pentadecagon_counts(const Word& w, const std::vector<Generator>& generators,
                                const PentadecagonLayout& layout);

}  // namespace kspoly
