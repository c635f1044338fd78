#include "kspoly/gf2code.hpp"

#include <algorithm>
#include <bit>

#include "kspoly/error.hpp"

namespace kspoly {

EchelonForm gf2_echelon(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_vectors();
    EchelonForm out;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].test(col)) rows[r] ^= rows[next];
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

int gf2_rank(const BitMatrix& m) { return static_cast<int>(gf2_echelon(m).rows.size()); }

CodeSpec gf2_nullspace(const BitMatrix& m) {
    const auto ech = gf2_echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    CodeSpec spec;
    spec.n = n;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(n);
        v.set(free);
        for (std::size_t i = 0; i < ech.rows.size(); ++i)
            if (ech.rows[i].test(free)) v.set(ech.pivots[i]);
        spec.nullspace_basis.push_back(std::move(v));
    }
    spec.k = spec.nullspace_basis.size();
    return spec;
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& c : counts_) t += c;
    return t;
}

WeightDistribution dual_weight_distribution(const BitMatrix& m, int max_rank) {
    const auto ech = gf2_echelon(m);
    const auto rank = static_cast<int>(ech.rows.size());
    if (rank > max_rank)
        throw BudgetExceeded("row space of rank " + std::to_string(rank) + " exceeds the enumeration limit " +
                             std::to_string(max_rank));
    std::vector<std::uint64_t> counts(m.cols() + 1, 0);
    BitVector cur(m.cols());
    ++counts[0];
    const std::uint64_t total = std::uint64_t{1} << rank;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= ech.rows[static_cast<std::size_t>(std::countr_zero(i))];
        ++counts[cur.weight()];
    }
    std::vector<BigInt> out(counts.begin(), counts.end());
    return WeightDistribution(std::move(out));
}

std::vector<BigInt> krawtchouk_row(std::size_t x, std::size_t n) {
    if (x > n) throw DomainError("Krawtchouk argument exceeds the length");
    std::vector<BigInt> k(n + 1);
    k[0] = 1;
    if (n == 0) return k;
    const BigInt a = BigInt(static_cast<long long>(n)) - 2 * BigInt(static_cast<long long>(x));
    k[1] = a;
    for (std::size_t w = 1; w < n; ++w) {
        const BigInt num = a * k[w] - BigInt(static_cast<long long>(n - w + 1)) * k[w - 1];
        k[w + 1] = num / static_cast<long long>(w + 1);
    }
    return k;
}

WeightDistribution macwilliams_transform(const WeightDistribution& dual, std::size_t n) {
    if (dual.counts().size() != n + 1) throw DomainError("dual distribution length does not match n");
    const BigInt size = dual.total();
    if (size <= 0 || (size & (size - 1)) != 0)
        throw InconsistentData("dual distribution does not sum to a power of two");
    std::vector<BigInt> acc(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        const BigInt& b = dual.at(j);
        if (b == 0) continue;
        if (b < 0) throw InconsistentData("negative dual count");
        const auto kr = krawtchouk_row(j, n);
        for (std::size_t w = 0; w <= n; ++w) acc[w] += b * kr[w];
    }
    for (std::size_t w = 0; w <= n; ++w) {
        if (acc[w] < 0 || acc[w] % size != 0)
            throw InconsistentData("MacWilliams transform is not a nonnegative integer at weight " +
                                   std::to_string(w));
        acc[w] /= size;
    }
    return WeightDistribution(std::move(acc));
}

BigInt odd_weight_total(const WeightDistribution& dist) {
    BigInt t = 0;
    for (std::size_t w = 1; w < dist.counts().size(); w += 2) t += dist.at(w);
    return t;
}

std::size_t minimality_bound(std::size_t n, std::size_t k) {
    if (k > n) throw DomainError("code dimension exceeds its length");
    return n - k + 1;
}

bool is_minimal_support(const BitMatrix& m, const BitVector& w, std::size_t support_limit) {
    if (w.size() != m.cols()) throw DomainError("vector length does not match the matrix");
    if (w.weight() % 2 == 0) throw DomainError("minimality is defined for odd-weight words");
    if (m.multiply(w).any()) throw DomainError("vector is not in the nullspace");
    const auto support = w.support();
    if (support.size() > support_limit)
        throw BudgetExceeded("support of " + std::to_string(support.size()) + " letters exceeds the limit " +
                             std::to_string(support_limit));

    const auto restricted = gf2_nullspace(m.select_columns(support));
    const std::size_t d = restricted.k;
    // Walk the restricted nullspace in Gray-code order; `w` itself is the all-ones vector.
    BitVector cur(support.size());
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= restricted.nullspace_basis[static_cast<std::size_t>(std::countr_zero(i))];
        const auto wt = cur.weight();
        if (wt % 2 == 1 && wt < support.size()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxReachWords = std::size_t{1} << 22;

void set_bit(std::vector<std::uint64_t>& bits, std::uint64_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool get_bit(const std::vector<std::uint64_t>& bits, std::uint64_t i) { return (bits[i >> 6] >> (i & 63)) & 1u; }

}  // namespace

CodewordEnumerator::CodewordEnumerator(const CodeSpec& spec, std::size_t max_weight, Parity parity,
                                       std::optional<std::uint64_t> cap)
    : n_(spec.n), max_weight_(std::min(max_weight, spec.n)), parity_(parity), cap_(cap) {
    for (const auto& v : spec.nullspace_basis)
        if (v.size() != n_) throw DomainError("code basis vector has the wrong length");

    // Parity-check matrix: a basis of the dual code.
    const auto dual = gf2_nullspace(BitMatrix::from_rows(n_, spec.nullspace_basis));
    const auto& checks = dual.nullspace_basis;
    syndrome_bits_ = checks.size() + (parity_ == Parity::Any ? 0 : 1);
    if (syndrome_bits_ > 63) throw DomainError("syndrome space too wide for the enumerator");
    if (parity_ != Parity::Any) parity_bit_ = std::uint64_t{1} << checks.size();

    column_syndromes_.assign(n_, parity_bit_);
    for (std::size_t i = 0; i < checks.size(); ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (checks[i].test(j)) column_syndromes_[j] |= std::uint64_t{1} << i;

    const std::size_t states = std::size_t{1} << syndrome_bits_;
    const std::size_t words = (states + 63) / 64;
    if (syndrome_bits_ < 40 && (n_ + 1) * (max_weight_ + 1) * words <= kMaxReachWords) {
        const std::size_t budgets = max_weight_ + 1;
        reach_.assign((n_ + 1) * budgets, std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < budgets; ++r) set_bit(reach_[n_ * budgets + r], 0);
        for (std::size_t j = n_; j-- > 0;) {
            for (std::size_t r = 0; r < budgets; ++r) {
                auto& cell = reach_[j * budgets + r];
                cell = reach_[(j + 1) * budgets + r];
                if (r == 0) continue;
                const auto& prev = reach_[(j + 1) * budgets + r - 1];
                for (std::size_t wi = 0; wi < words; ++wi) {
                    std::uint64_t bits = prev[wi];
                    while (bits) {
                        const std::uint64_t x = wi * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
                        set_bit(cell, x ^ column_syndromes_[j]);
                        bits &= bits - 1;
                    }
                }
            }
        }
    }
}

bool CodewordEnumerator::accepts(std::uint64_t syndrome) const {
    return syndrome == (parity_ == Parity::Odd ? parity_bit_ : 0);
}

bool CodewordEnumerator::reachable(std::size_t from, std::size_t budget, std::uint64_t syndrome) const {
    return get_bit(reach_[from * (max_weight_ + 1) + budget], syndrome);
}

bool CodewordEnumerator::feasible(std::size_t column, std::uint64_t syndrome, std::size_t weight) const {
    if (weight > max_weight_) return false;
    if (reach_.empty()) return true;
    const std::uint64_t target = syndrome ^ (parity_ == Parity::Odd ? parity_bit_ : 0);
    return reachable(column, max_weight_ - weight, target);
}

BitVector CodewordEnumerator::current() const {
    BitVector v(n_);
    for (auto c : path_) v.set(c);
    return v;
}

std::optional<BitVector> CodewordEnumerator::emit() {
    if (cap_ && emitted_ >= *cap_)
        throw BudgetExceeded("codeword cap of " + std::to_string(*cap_) + " reached");
    ++emitted_;
    return current();
}

std::optional<BitVector> CodewordEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!feasible(0, 0, 0)) {
            done_ = true;
            return std::nullopt;
        }
        stack_.push_back({0, 0, 0});
        if (accepts(0)) return emit();
    }
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        if (top.next_column >= n_ || top.weight >= max_weight_) {
            stack_.pop_back();
            if (!path_.empty() && path_.size() == stack_.size()) path_.pop_back();
            continue;
        }
        const std::size_t c = top.next_column++;
        const std::uint64_t s = top.syndrome ^ column_syndromes_[c];
        const std::size_t w = top.weight + 1;
        if (!feasible(c + 1, s, w)) continue;
        path_.push_back(c);
        stack_.push_back({c + 1, s, w});
        if (accepts(s)) return emit();
    }
    done_ = true;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

BitVector word_to_vector(const Word& w, const std::vector<Generator>& generators) {
    BitVector v(generators.size());
    for (const auto& l : w.letters()) {
        auto it = std::find_if(generators.begin(), generators.end(), [&](const Generator& g) { return g.label == l; });
        if (it == generators.end()) throw DomainError("unknown letter " + l.text());
        v.set(static_cast<std::size_t>(it - generators.begin()));
    }
    return v;
}

Word vector_to_word(const BitVector& v, const std::vector<Generator>& generators, PolytopeId polytope) {
    if (v.size() != generators.size()) throw DomainError("vector length does not match the generator count");
    std::vector<Letter> letters;
    for (auto i : v.support()) letters.push_back(generators[i].label);
    return Word::from_letters(std::move(letters), polytope);
}

BitMatrix profile_matrix_mod2(const ProfileMatrix& m) {
    BitMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) % 2 != 0) out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return out;
}

bool is_nullspace_word(const Word& w, const ProfileMatrix& m, const std::vector<Generator>& generators) {
    return !profile_matrix_mod2(m).multiply(word_to_vector(w, generators)).any();
}

bool is_minimal_word(const Word& w, const ProfileMatrix& m, const std::vector<Generator>& generators,
                     std::size_t support_limit) {
    return is_minimal_support(profile_matrix_mod2(m), word_to_vector(w, generators), support_limit);
}

std::string weight_distribution_csv(const WeightDistribution& dist, bool odd_only) {
    std::string out = "weight,count\n";
    for (std::size_t w = 0; w < dist.counts().size(); ++w) {
        if ((odd_only && w % 2 == 0) || dist.at(w) == 0) continue;
        out += std::to_string(w) + "," + dist.at(w).str() + "\n";
    }
    return out;
}

std::string weight_distribution_json(const WeightDistribution& dist, bool odd_only) {
    BigInt total = 0;
    std::string rows;
    for (std::size_t w = 0; w < dist.counts().size(); ++w) {
        if ((odd_only && w % 2 == 0) || dist.at(w) == 0) continue;
        total += dist.at(w);
        if (!rows.empty()) rows += ",\n";
        rows += "    {\"weight\": " + std::to_string(w) + ", \"count\": \"" + dist.at(w).str() + "\"}";
    }
    std::string out = "{\n  \"length\": " + std::to_string(dist.length()) + ",\n";
    out += "  \"odd_only\": " + std::string(odd_only ? "true" : "false") + ",\n";
    out += "  \"total\": \"" + total.str() + "\",\n";
    out += "  \"counts\": [\n" + rows + (rows.empty() ? "" : "\n") + "  ]\n}\n";
    return out;
}

}  // namespace kspoly
