#include "psq/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <json.hpp>

namespace psq {

namespace {

int infer_alphabet(const std::vector<Symbol>& symbols)
{
    int k = 2;
    for (Symbol s : symbols)
        k = std::max(k, int(s) + 1);
    return k;
}

void require_binary(const Word& w, const char* what)
{
    if (w.alphabet_size() > 2)
        throw std::invalid_argument(std::string(what) + ": word is not binary");
}

// Collects the distinct factors w[i, i + 2L) for which `half_matches` holds
// for every j < L between w[i + j] and w[i + L + j]. Scans each half-length
// with a running count of consecutive matching positions.
template <class Relation>
WordSet distinct_doubled_factors(const Word& w, std::size_t max_order, Relation half_matches)
{
    const std::size_t n = w.size();
    const std::string_view bytes = w.bytes();
    std::unordered_set<std::string_view> seen;
    const std::size_t top = std::min(max_order, n / 2);
    for (std::size_t half = 1; half <= top; ++half) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + half < n; ++i) {
            run = half_matches(w[i], w[i + half]) ? run + 1 : 0;
            if (run >= half)
                seen.insert(bytes.substr(i + 1 - half, 2 * half));
        }
    }
    WordSet out;
    for (std::string_view s : seen) {
        std::vector<Symbol> symbols(s.begin(), s.end());
        out.insert(Word(std::move(symbols), w.alphabet_size()));
    }
    return out;
}

} // namespace

Word::Word(std::vector<Symbol> symbols, int alphabet_size)
  : symbols_(std::move(symbols)),
    alphabet_size_(alphabet_size == 0 ? infer_alphabet(symbols_) : alphabet_size)
{
    if (alphabet_size_ < 1 || alphabet_size_ > 256)
        throw std::invalid_argument("alphabet size out of range");
    for (Symbol s : symbols_)
        if (s >= alphabet_size_)
            throw std::invalid_argument("symbol " + std::to_string(int(s)) +
                                        " outside alphabet of size " +
                                        std::to_string(alphabet_size_));
}

Word::Word(std::initializer_list<Symbol> symbols, int alphabet_size)
  : Word(std::vector<Symbol>(symbols), alphabet_size)
{
}

Word Word::parse(std::string_view text, int alphabet_size)
{
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text)
        symbols.push_back(char_symbol(c));
    return Word(std::move(symbols), alphabet_size);
}

std::string Word::str() const
{
    std::string s;
    s.reserve(symbols_.size());
    for (Symbol c : symbols_)
        s.push_back(symbol_char(c));
    return s;
}

Word Word::factor(std::size_t pos, std::size_t len) const
{
    if (pos > size() || len > size() - pos)
        throw std::out_of_range("factor outside word");
    return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len),
                alphabet_size_);
}

Word Word::with_alphabet(int alphabet_size) const
{
    return Word(symbols_, alphabet_size);
}

void Word::push_back(Symbol s)
{
    if (s >= alphabet_size_)
        throw std::invalid_argument("symbol outside alphabet");
    symbols_.push_back(s);
}

Word operator+(const Word& lhs, const Word& rhs)
{
    std::vector<Symbol> symbols = lhs.symbols_;
    symbols.insert(symbols.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    return Word(std::move(symbols), std::max(lhs.alphabet_size_, rhs.alphabet_size_));
}

char symbol_char(Symbol s)
{
    if (s < 10)
        return char('0' + s);
    if (s < kMaxAlphabet)
        return char('a' + (s - 10));
    throw std::invalid_argument("symbol has no text form");
}

Symbol char_symbol(char c)
{
    if (c >= '0' && c <= '9')
        return Symbol(c - '0');
    if (c >= 'a' && c <= 'z')
        return Symbol(c - 'a' + 10);
    throw std::invalid_argument(std::string("invalid symbol character '") + c + "'");
}

Word complement(const Word& w)
{
    require_binary(w, "complement");
    std::vector<Symbol> out(w.begin(), w.end());
    for (Symbol& s : out)
        s ^= 1;
    return Word(std::move(out), w.alphabet_size());
}

Word reverse(const Word& w)
{
    return Word(std::vector<Symbol>(w.symbols().rbegin(), w.symbols().rend()), w.alphabet_size());
}

bool is_factor(const Word& needle, const Word& haystack)
{
    return haystack.bytes().find(needle.bytes()) != std::string_view::npos;
}

std::vector<std::size_t> occurrences(const Word& needle, const Word& haystack)
{
    std::vector<std::size_t> out;
    const std::string_view h = haystack.bytes();
    const std::string_view n = needle.bytes();
    for (std::size_t pos = h.find(n); pos != std::string_view::npos; pos = h.find(n, pos + 1))
        out.push_back(pos);
    return out;
}

bool is_square(const Word& u)
{
    if (u.empty() || u.size() % 2 != 0)
        return false;
    const std::size_t half = u.size() / 2;
    return std::equal(u.begin(), u.begin() + half, u.begin() + half);
}

bool is_antisquare(const Word& u)
{
    if (u.empty() || u.size() % 2 != 0 || u.alphabet_size() > 2)
        return false;
    const std::size_t half = u.size() / 2;
    for (std::size_t i = 0; i < half; ++i)
        if (u[i] == u[i + half])
            return false;
    return true;
}

WordSet distinct_squares(const Word& w, std::size_t max_order)
{
    return distinct_doubled_factors(w, max_order, [](Symbol a, Symbol b) { return a == b; });
}

WordSet distinct_antisquares(const Word& w, std::size_t max_order)
{
    require_binary(w, "distinct_antisquares");
    return distinct_doubled_factors(w, max_order, [](Symbol a, Symbol b) { return a != b; });
}

bool is_squarefree(const Word& w)
{
    const std::size_t n = w.size();
    for (std::size_t half = 1; 2 * half <= n; ++half) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + half < n; ++i) {
            run = w[i] == w[i + half] ? run + 1 : 0;
            if (run >= half)
                return false;
        }
    }
    return true;
}

FactorInventory inventory(const Word& w)
{
    return {distinct_squares(w), distinct_antisquares(w), w.size()};
}

std::string inventory_json(const FactorInventory& inv)
{
    nlohmann::ordered_json j;
    j["squares"] = nlohmann::json::array();
    j["antisquares"] = nlohmann::json::array();
    for (const Word& s : inv.squares)
        j["squares"].push_back(s.str());
    for (const Word& s : inv.antisquares)
        j["antisquares"].push_back(s.str());
    return j.dump();
}

std::vector<Word> parse_word_lines(std::string_view text, int alphabet_size)
{
    std::vector<Word> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (!line.empty())
            out.push_back(Word::parse(line, alphabet_size));
        start = end + 1;
    }
    return out;
}

} // namespace psq
