// search.hpp -- longest words under avoidance constraints, the
// squares/antisquares table, canonical searches over unbounded alphabets and
// discovery of uniform morphisms.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psq/morphism.hpp"
#include "psq/pseudosquare.hpp"
#include "psq/repetition.hpp"
#include "psq/word.hpp"

namespace psq {

/// Forbids pseudosquares of one kind with min_len <= |x| <= max_len.
struct PseudosquareBan
{
    PseudosquareKind kind = PseudosquareKind::permutation;
    std::size_t min_len = 1;
    std::size_t max_len = SIZE_MAX;
    MatchBudget budget;          ///< morphic bans only
    bool bidirectional = false;  ///< transformation bans only
};

/// A conjunction of prefix-closed avoidance conditions: once a word violates
/// one, every extension does too.
struct SearchConstraint
{
    std::optional<std::size_t> max_squares;
    std::optional<std::size_t> max_antisquares;
    std::optional<std::size_t> max_combined; ///< squares + antisquares
    std::vector<Word> forbidden_factors;
    std::optional<FreenessSpec> exponent_cap;
    std::vector<PseudosquareBan> pseudosquare_bans;

    /// At most a distinct squares and at most b distinct antisquares.
    static SearchConstraint squares_antisquares(std::size_t a, std::size_t b);

    /// Throws `std::invalid_argument` if no condition is present.
    void validate() const;

    /// Whether binary complement maps admissible words to admissible words
    /// (true unless the forbidden factors break the symmetry).
    bool complement_invariant() const;

    bool tracks_squares() const noexcept { return max_squares || max_combined; }
    bool tracks_antisquares() const noexcept { return max_antisquares || max_combined; }

    std::string json() const;
};

/// The path state of a depth-first search: the current word and the running
/// square/antisquare inventories, updated incrementally. Everything new that
/// a push creates ends at the last position, so only suffixes are examined.
class SearchState
{
public:
    /// alphabet_size == 0 selects restricted-growth mode: the next symbol may
    /// be at most one more than the largest symbol used so far.
    SearchState(const SearchConstraint& constraint, int alphabet_size);

    /// Appends s if the result still satisfies the constraint. On failure the
    /// state is left unchanged.
    bool push(Symbol s);
    void pop();

    std::size_t size() const noexcept { return word_.size(); }
    std::span<const Symbol> word() const noexcept { return word_; }
    Word to_word() const;

    /// Exclusive upper bound for the next symbol.
    int symbol_limit() const noexcept;

    std::size_t square_count() const noexcept { return squares_.size(); }
    std::size_t antisquare_count() const noexcept { return antisquares_.size(); }
    WordSet squares() const;
    WordSet antisquares() const;

private:
    struct Occurrence
    {
        std::size_t start;
        std::size_t length;
    };

    bool known(const std::vector<Occurrence>& list, std::size_t start, std::size_t length) const;

    const SearchConstraint& constraint_;
    int alphabet_size_;
    std::vector<Symbol> word_;
    std::vector<Occurrence> squares_;
    std::vector<Occurrence> antisquares_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> undo_;
    std::vector<int> max_symbol_; ///< largest symbol in each prefix (restricted growth)
};

struct SearchOutcome
{
    std::size_t max_length_found = 0;
    Word witness;
    bool exhausted = false; ///< false: the cutoff length was reached
    std::uint64_t nodes_visited = 0;

    std::string json() const;
};

struct SearchOptions
{
    std::size_t cutoff = 500;
    unsigned workers = 1;
    /// Depth at which the tree is cut into independent tasks. Results do not
    /// depend on the worker count, only on this value (through nodes_visited).
    std::size_t split_depth = 12;
    /// Fix the first symbol to 0 when the constraint is complement-invariant.
    bool use_symmetry = true;
    std::function<void(std::string_view)> progress;
};

/// Longest word over {0..k-1} satisfying c, or the lexicographically least
/// word of length options.cutoff if one exists. The witness is the
/// lexicographically least word of maximal length.
SearchOutcome longest_word(const SearchConstraint& c, int alphabet_size,
                           const SearchOptions& options = {});

/// Longest word over any finite alphabet avoiding one pseudosquare kind with
/// |x| >= min_len. Only restricted-growth words are generated: relabeling
/// letters maps pseudosquares to pseudosquares of the same kind.
SearchOutcome longest_word_any_alphabet(PseudosquareKind kind, std::size_t min_len,
                                        bool bidirectional, const SearchOptions& options = {});

/// grid[a][b] = longest binary word with <= a squares and <= b antisquares.
using SearchTable = std::vector<std::vector<SearchOutcome>>;

SearchTable build_table(std::size_t a_max, std::size_t b_max, const SearchOptions& options = {});

/// Tab-separated table with a header row; "inf" marks cutoff-reached cells.
std::string table_tsv(const SearchTable& table);

/// One line per row, "a: v0 v1 ...".
std::string table_rows(const SearchTable& table);

// ---------------------------------------------------------------------------
// Uniform morphism discovery

struct DiscoverOptions
{
    std::size_t check_len = 24;       ///< squarefree words checked in the final test
    std::size_t max_results = SIZE_MAX;
    std::vector<Word> image_prefixes; ///< optional forced prefixes of h(0), h(1), h(2)
    std::uint64_t node_limit = 0;     ///< 0 = unlimited
};

struct DiscoverStats
{
    std::size_t found = 0;
    std::uint64_t nodes = 0;
    bool node_limit_hit = false;
};

/// Backtracks over binary words of length 3q read as h(0) h(1) h(2). While a
/// letter's image is being built, images of short squarefree words ending in
/// that letter are kept within the budget. A complete candidate is accepted if
/// h(w) has at most a distinct squares and b distinct antisquares (taken
/// together over all w) for every squarefree ternary w with
/// |w| <= check_len. Accepted morphisms go to `found`; returning false stops.
DiscoverStats discover_uniform_morphism(std::size_t a, std::size_t b, std::size_t q,
                                        const DiscoverOptions& options,
                                        const std::function<bool(const Morphism&)>& found);

/// Does h keep the images of squarefree ternary words of length <= check_len
/// within (a, b)? This is the final test discover_uniform_morphism applies.
bool morphism_within_budget(const Morphism& h, std::size_t a, std::size_t b,
                            std::size_t check_len);

} // namespace psq
