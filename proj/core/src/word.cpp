#include "kspoly/word.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "kspoly/error.hpp"

namespace kspoly {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Reads one token starting at pos; advances pos past it.
Letter read_letter(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("malformed token at offset " + std::to_string(start) + " in '" + std::string(text) +
                          "': " + why);
    };
    if (pos >= text.size() || !is_lower(text[pos])) throw fail("expected a lowercase letter");
    Letter l;
    l.base = text[pos++];
    if (pos < text.size() && text[pos] == '\'') {
        l.primed = true;
        ++pos;
    }
    bool underscore = false;
    if (pos < text.size() && text[pos] == '_') {
        underscore = true;
        ++pos;
    }
    const std::size_t digits_start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == digits_start) {
        if (underscore) throw fail("'_' must be followed by digits");
        return l;
    }
    if (pos - digits_start > 6) throw fail("subscript too long");
    const auto digits = text.substr(digits_start, pos - digits_start);
    if (digits.size() > 1 && digits.front() == '0') throw fail("subscript has a leading zero");
    int value = 0;
    for (char c : digits) value = value * 10 + (c - '0');
    if (value == 0) throw fail("subscript must be positive");
    l.index = value;
    return l;
}

}  // namespace

std::string Letter::text() const {
    std::string s(1, base);
    if (primed) s += '\'';
    if (index > 0) s += std::to_string(index);
    return s;
}

Letter parse_letter(std::string_view token) {
    std::size_t pos = 0;
    Letter l = read_letter(token, pos);
    if (pos != token.size()) throw ParseError("trailing characters in token '" + std::string(token) + "'");
    return l;
}

Word Word::from_letters(std::vector<Letter> letters, std::optional<PolytopeId> polytope) {
    std::sort(letters.begin(), letters.end());
    if (auto it = std::adjacent_find(letters.begin(), letters.end()); it != letters.end())
        throw DomainError("duplicate letter " + it->text());
    Word w;
    w.letters_ = std::move(letters);
    w.polytope_ = polytope;
    return w;
}

bool Word::contains(const Letter& l) const { return std::binary_search(letters_.begin(), letters_.end(), l); }

Word Word::with_polytope(PolytopeId id) const {
    Word w = *this;
    w.polytope_ = id;
    return w;
}

Word compose_words(const Word& u, const Word& v) {
    if (u.polytope() && v.polytope() && *u.polytope() != *v.polytope())
        throw DomainError("cannot compose words of different polytopes");
    std::vector<Letter> out;
    std::set_symmetric_difference(u.letters().begin(), u.letters().end(), v.letters().begin(), v.letters().end(),
                                  std::back_inserter(out));
    return Word::from_letters(std::move(out), u.polytope() ? u.polytope() : v.polytope());
}

Word parse_word(std::string_view text, std::optional<PolytopeId> polytope) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && is_space(text[pos])) ++pos;
        if (pos >= text.size()) break;
        letters.push_back(read_letter(text, pos));
    }
    std::vector<Letter> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
        throw ParseError("duplicate letter " + it->text() + " in '" + std::string(text) + "'");
    return Word::from_letters(std::move(sorted), polytope);
}

std::string render_word(const Word& w) {
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += l.text();
    }
    return out;
}

}  // namespace kspoly
