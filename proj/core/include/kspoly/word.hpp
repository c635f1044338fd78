#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kspoly/layout.hpp"

namespace kspoly {

/// A generator label: lowercase letter, optional prime, optional subscript.
/// Ordering is the canonical one: unprimed before primed, then letter, then subscript.
struct Letter {
    char base = 'a';
    bool primed = false;
    int index = 0;  ///< 0 means "no subscript"

    std::string text() const;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.primed <=> b.primed; c != 0) return c;
        if (auto c = a.base <=> b.base; c != 0) return c;
        return a.index <=> b.index;
    }
};

/// Parses exactly one token such as "a", "r'", "m11", "e'2" or "e'_2".
Letter parse_letter(std::string_view token);

/// A set of generator letters. Letters are kept sorted in canonical order;
/// the optional polytope tag is set once the word has been checked against
/// a generator set.
class Word {
public:
    Word() = default;
    /// Throws DomainError if a letter repeats.
    static Word from_letters(std::vector<Letter> letters, std::optional<PolytopeId> polytope = std::nullopt);

    const std::vector<Letter>& letters() const { return letters_; }
    std::optional<PolytopeId> polytope() const { return polytope_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool contains(const Letter& l) const;

    Word with_polytope(PolytopeId id) const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
    std::optional<PolytopeId> polytope_;
};

/// Symmetric difference of the letter sets. Throws DomainError when both
/// words are tagged with different polytopes.
Word compose_words(const Word& u, const Word& v);

/// WORD := TOKEN (WS? TOKEN)*. Whitespace between tokens is optional, so both
/// "a1 c1 d1" and "abegkri'" parse. Throws ParseError on malformed or duplicate tokens.
Word parse_word(std::string_view text, std::optional<PolytopeId> polytope = std::nullopt);

/// Canonical text: letters in canonical order separated by single spaces.
std::string render_word(const Word& w);

}  // namespace kspoly
