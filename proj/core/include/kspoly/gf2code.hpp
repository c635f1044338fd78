#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kspoly/bitmatrix.hpp"
#include "kspoly/raysystem.hpp"

namespace kspoly {

using BigInt = boost::multiprecision::cpp_int;

/// Binary (n, k) code {X : M X = 0 mod 2} described by a basis of k vectors.
struct CodeSpec {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<BitVector> nullspace_basis;
};

int gf2_rank(const BitMatrix& m);

/// Reduced row echelon form; returns the nonzero rows (a basis of the row space)
/// and the pivot column of each.
struct EchelonForm {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
};
EchelonForm gf2_echelon(const BitMatrix& m);

CodeSpec gf2_nullspace(const BitMatrix& m);

/// Exact number of codewords per Hamming weight 0..n.
class WeightDistribution {
public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::vector<BigInt> counts) : counts_(std::move(counts)) {}

    std::size_t length() const { return counts_.empty() ? 0 : counts_.size() - 1; }
    const BigInt& at(std::size_t weight) const { return counts_.at(weight); }
    const std::vector<BigInt>& counts() const { return counts_; }
    BigInt total() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::vector<BigInt> counts_;
};

/// Enumerates all 2^rank vectors of the row space of M (Gray-code order).
/// Throws BudgetExceeded when rank exceeds max_rank.
WeightDistribution dual_weight_distribution(const BitMatrix& m, int max_rank = 26);

/// W(w) = |dual|^-1 * sum_j dual[j] K_w(j; n) with binary Krawtchouk kernels,
/// exact integer arithmetic. Throws InconsistentData on a non-integral or negative
/// result or when the dual does not sum to a power of two.
WeightDistribution macwilliams_transform(const WeightDistribution& dual, std::size_t n);

/// K_w(x; n) = sum_s (-1)^s C(x, s) C(n - x, w - s), evaluated by the three-term recurrence.
std::vector<BigInt> krawtchouk_row(std::size_t x, std::size_t n);

BigInt odd_weight_total(const WeightDistribution& dist);

/// n - k + 1: no minimal codeword is heavier.
std::size_t minimality_bound(std::size_t n, std::size_t k);

inline constexpr std::size_t kMinimalitySupportLimit = 25;

/// True iff no odd-weight vector of {X : M X = 0} has support strictly inside supp(w).
/// `w` must itself be an odd-weight nullspace vector (DomainError otherwise).
/// Throws BudgetExceeded when |supp(w)| > support_limit.
bool is_minimal_support(const BitMatrix& m, const BitVector& w,
                        std::size_t support_limit = kMinimalitySupportLimit);

enum class Parity { Odd, Even, Any };

/// Streams every codeword of weight <= max_weight and the requested parity,
/// each once, ordered lexicographically by support (a prefix precedes its
/// extensions; the zero word comes first unless parity is Odd). Branches are
/// pruned with exact reachability tables over the syndrome space when n - k
/// is small. Requires n - k < 63.
class CodewordEnumerator {
public:
    /// `cap`: maximum number of codewords to emit; next() throws BudgetExceeded beyond it.
    CodewordEnumerator(const CodeSpec& spec, std::size_t max_weight, Parity parity,
                       std::optional<std::uint64_t> cap = std::nullopt);

    std::optional<BitVector> next();
    std::uint64_t emitted() const { return emitted_; }

private:
    struct Frame {
        std::size_t next_column;
        std::uint64_t syndrome;
        std::size_t weight;
    };

    bool accepts(std::uint64_t syndrome) const;
    bool feasible(std::size_t column, std::uint64_t syndrome, std::size_t weight) const;
    bool reachable(std::size_t from, std::size_t budget, std::uint64_t syndrome) const;
    BitVector current() const;
    std::optional<BitVector> emit();

    std::size_t n_;
    std::size_t max_weight_;
    Parity parity_;
    std::optional<std::uint64_t> cap_;
    std::uint64_t emitted_ = 0;

    std::size_t syndrome_bits_ = 0;
    std::vector<std::uint64_t> column_syndromes_;
    // reach_[(j * (max_weight_ + 1) + r)] is a bitset over syndromes reachable from
    // columns >= j using at most r of them; empty when the table would be too large.
    std::vector<std::vector<std::uint64_t>> reach_;
    std::uint64_t parity_bit_ = 0;

    bool started_ = false;
    bool done_ = false;
    std::vector<Frame> stack_;
    std::vector<std::size_t> path_;
};

/// Word <-> indicator vector over the generator list.
BitVector word_to_vector(const Word& w, const std::vector<Generator>& generators);
Word vector_to_word(const BitVector& v, const std::vector<Generator>& generators, PolytopeId polytope);

BitMatrix profile_matrix_mod2(const ProfileMatrix& m);
bool is_nullspace_word(const Word& w, const ProfileMatrix& m, const std::vector<Generator>& generators);
bool is_minimal_word(const Word& w, const ProfileMatrix& m, const std::vector<Generator>& generators,
                     std::size_t support_limit = kMinimalitySupportLimit);

/// "weight,count" lines, counts in decimal; optionally odd weights only.
std::string weight_distribution_csv(const WeightDistribution& dist, bool odd_only);
/// {"length":n,"total":"...","counts":[{"weight":w,"count":"..."}]}; counts as decimal strings.
std::string weight_distribution_json(const WeightDistribution& dist, bool odd_only);

}  // namespace kspoly
