// word.hpp -- finite words over small integer alphabets and their
// square/antisquare inventories.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psq {

/// A letter of a word. Alphabets are {0, 1, ..., k-1} with k <= 36.
using Symbol = std::uint8_t;

/// Largest alphabet that has a textual form ('0'..'9' then 'a'..'z').
inline constexpr int kMaxAlphabet = 36;

/// A finite word together with the size of the alphabet it lives over.
///
/// Equality and ordering look at the symbols only; the alphabet size is
/// bookkeeping used for validation (complement needs a binary word, morphisms
/// need the domain letters in range, ...).
class Word
{
public:
    Word() = default;

    /// Throws `std::invalid_argument` if some symbol is >= alphabet_size.
    /// An alphabet_size of 0 means "infer": max(2, largest symbol + 1).
    explicit Word(std::vector<Symbol> symbols, int alphabet_size = 0);
    Word(std::initializer_list<Symbol> symbols, int alphabet_size = 0);

    /// Parses the text form ("0102", "0a1b", ...). Throws on bad characters.
    static Word parse(std::string_view text, int alphabet_size = 0);

    std::string str() const;

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    int alphabet_size() const noexcept { return alphabet_size_; }

    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    std::span<const Symbol> view() const noexcept { return symbols_; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    /// Raw bytes, for hashing and memcmp-style comparisons.
    std::string_view bytes() const noexcept
    {
        return {reinterpret_cast<const char*>(symbols_.data()), symbols_.size()};
    }

    Word factor(std::size_t pos, std::size_t len) const;
    Word with_alphabet(int alphabet_size) const;

    void push_back(Symbol s);

    friend Word operator+(const Word& lhs, const Word& rhs);

    friend bool operator==(const Word& a, const Word& b) noexcept
    {
        return a.symbols_ == b.symbols_;
    }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept
    {
        return a.symbols_ <=> b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
    int alphabet_size_ = 2;
};

/// Orders by length first, then lexicographically.
struct ShortLex
{
    bool operator()(const Word& a, const Word& b) const noexcept
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

using WordSet = std::set<Word, ShortLex>;

/// Text form of a single symbol.
char symbol_char(Symbol s);

/// Inverse of symbol_char; throws `std::invalid_argument` on other characters.
Symbol char_symbol(char c);

/// Symbolwise 0 <-> 1. Throws `std::invalid_argument` on non-binary input.
Word complement(const Word& w);

Word reverse(const Word& w);

bool is_factor(const Word& needle, const Word& haystack);

/// Start positions of all occurrences of `needle` in `haystack`.
std::vector<std::size_t> occurrences(const Word& needle, const Word& haystack);

bool is_square(const Word& u);

/// True iff u = x complement(x) for some nonempty x (binary words only).
bool is_antisquare(const Word& u);

/// Squares xx with 1 <= |x| <= max_order occurring in w, each listed once.
WordSet distinct_squares(const Word& w, std::size_t max_order = SIZE_MAX);

/// Antisquares x complement(x) with 1 <= |x| <= max_order occurring in w.
/// Throws `std::invalid_argument` unless w is binary.
WordSet distinct_antisquares(const Word& w, std::size_t max_order = SIZE_MAX);

bool is_squarefree(const Word& w);

struct FactorInventory
{
    WordSet squares;
    WordSet antisquares;
    std::size_t source_length = 0;

    std::size_t combined() const noexcept { return squares.size() + antisquares.size(); }
};

/// Squares and antisquares of a binary word.
FactorInventory inventory(const Word& w);

/// {"squares":[...],"antisquares":[...]} with members in ShortLex order.
std::string inventory_json(const FactorInventory& inv);

/// Reads one word per line (blank lines skipped).
std::vector<Word> parse_word_lines(std::string_view text, int alphabet_size = 0);

} // namespace psq
