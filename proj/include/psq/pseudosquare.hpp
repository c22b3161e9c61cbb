// pseudosquare.hpp -- factors x x' where x' is the image of x under a
// permutation of the alphabet, an arbitrary transformation of the alphabet,
// or a nonerasing morphism.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "psq/morphism.hpp"
#include "psq/word.hpp"

namespace psq {

enum class PseudosquareKind
{
    permutation,
    transformation,
    morphic,
};

enum class Orientation
{
    x_then_image, ///< factor = x . witness(x)
    image_then_x, ///< factor = witness(x) . x
};

std::string_view to_string(PseudosquareKind kind);
std::string_view to_string(Orientation o);

/// Parses "perm"/"permutation", "trans"/"transformation", "morphic".
PseudosquareKind parse_kind(std::string_view text);

struct PseudosquareHit
{
    std::size_t position = 0; ///< start of the factor in the scanned word
    Word x;
    Morphism witness;         ///< coding for permutation/transformation hits
    PseudosquareKind kind = PseudosquareKind::permutation;
    Orientation orientation = Orientation::x_then_image;

    std::size_t length() const { return x.size() + apply(witness, x).size(); }

    /// Recomputes the factor from x and the witness.
    Word factor() const;

    std::string json() const;
};

struct MatchBudget
{
    std::size_t max_total_image = SIZE_MAX; ///< cap on the sum of |h(a)|
    bool require_nonerasing = true;
};

/// Looks for h with h(x) = y and the sum of |h(a)| over x's alphabet within
/// budget. Letters of the alphabet that do not occur in x are sent to "0"
/// (nonerasing) or the empty word. Among the matching morphisms the one with
/// lexicographically least tuple of images (h(0), h(1), ...) is returned.
std::optional<Morphism> morphism_match(const Word& x, const Word& y, const MatchBudget& budget = {});

/// Leftmost, then shortest, factor x p(x) with |x| >= min_len and p a
/// bijection of w's alphabet.
std::optional<PseudosquareHit> find_permutation_pseudosquare(const Word& w, std::size_t min_len);

/// As above with p any map of the alphabet; if bidirectional, factors x x'
/// with x = t(x') also count (reported as image_then_x with x := x').
std::optional<PseudosquareHit> find_transformation_pseudosquare(const Word& w, std::size_t min_len,
                                                                bool bidirectional);

/// Leftmost, then shortest |x|, then shortest |h(x)|, factor x h(x) with
/// min_len <= |x| <= max_len and h a morphism on w's alphabet within budget.
std::optional<PseudosquareHit> find_morphic_pseudosquare(const Word& w, std::size_t min_len,
                                                         std::size_t max_len,
                                                         const MatchBudget& budget = {});

// Suffix-anchored tests used by the incremental searches: is there a hit of
// the given kind ending exactly at the end of w?

bool coding_pseudosquare_at_end(std::span<const Symbol> w, std::size_t min_len, bool bijective,
                                bool bidirectional);

bool morphic_pseudosquare_at_end(std::span<const Symbol> w, std::size_t min_len,
                                 std::size_t max_len, const MatchBudget& budget);

/// True iff some map of letters sends x onto y position by position (and is
/// injective when `bijective`). |x| must equal |y|.
bool coding_maps(std::span<const Symbol> x, std::span<const Symbol> y, bool bijective);

/// Binary fast path of morphism_match without building the witness: is there
/// a morphism with h(x) = y within budget? x and y are binary.
bool binary_morphism_matches(std::span<const Symbol> x, std::span<const Symbol> y,
                             const MatchBudget& budget);

} // namespace psq
