// generator.hpp -- depth-first enumeration of prefix-closed word families,
// and scans of morphic images of such families.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "psq/morphism.hpp"
#include "psq/repetition.hpp"
#include "psq/word.hpp"

namespace psq {

/// Decides whether a word may be kept, given that every proper prefix of it
/// was already accepted. Implementations only need to look at what the last
/// symbol created (a square ending there, a repetition ending there, ...).
using ExtensionTest = std::function<bool(std::span<const Symbol>)>;

/// Receives each accepted word; returning false stops the enumeration.
using WordVisitor = std::function<bool(std::span<const Symbol>)>;

struct EnumerationSpec
{
    int alphabet_size = 2;
    std::size_t max_length = 0;
    ExtensionTest accepts; ///< empty means "accept everything"
};

ExtensionTest accept_all();
ExtensionTest squarefree_extension();
ExtensionTest freeness_extension(const FreenessSpec& spec);

/// The (7/4+)-free condition on ternary words.
FreenessSpec dejean_ternary_spec();

/// Visits the accepted words of length <= max_length (the empty word first)
/// in depth-first lexicographic order. Returns the number of words visited.
std::size_t enumerate(const EnumerationSpec& spec, const WordVisitor& visit);

/// Convenience: materializes enumerate().
std::vector<Word> collect(const EnumerationSpec& spec);

/// Visits accepted words of length exactly n.
std::size_t enumerate_length(const EnumerationSpec& spec, std::size_t n, const WordVisitor& visit);

/// Squarefree ternary words of length exactly n.
std::size_t squarefree_ternary(std::size_t n, const WordVisitor& visit);

/// (7/4+)-free ternary words of length exactly n.
std::size_t dejean_free_ternary(std::size_t n, const WordVisitor& visit);

/// Squares and antisquares of bounded order found in h(u) over a family of
/// domain words u, each with the first domain word whose image contains it.
struct ImageScanOptions
{
    std::size_t max_square_order = 0;     ///< 0 skips squares
    std::size_t max_antisquare_order = 0; ///< 0 skips antisquares (binary targets only)
    std::vector<Word> watched_factors;    ///< reported if they occur anywhere
    /// The scan stops early once more than this many distinct squares
    /// (antisquares) have been seen.
    std::size_t square_limit = SIZE_MAX;
    std::size_t antisquare_limit = SIZE_MAX;
};

struct ImageScanResult
{
    std::map<Word, Word, ShortLex> squares;     ///< square -> domain word
    std::map<Word, Word, ShortLex> antisquares; ///< antisquare -> domain word
    std::map<Word, Word, ShortLex> watched;     ///< watched factor -> domain word
    std::size_t domain_words = 0;
    bool stopped_early = false;

    WordSet square_set() const;
    WordSet antisquare_set() const;
};

/// Scans h(u) for every u accepted by `domain` with |u| <= domain.max_length.
/// Each node appends one image block and only examines factors ending in it.
ImageScanResult scan_images(const Morphism& h, const EnumerationSpec& domain,
                            const ImageScanOptions& options);

/// Domain length that makes a scan for factors of length <= factor_length
/// exhaustive: ceil(factor_length / min image length) + 2.
std::size_t covering_domain_length(const Morphism& h, std::size_t factor_length);

} // namespace psq
