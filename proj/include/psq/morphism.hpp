// morphism.hpp -- morphisms between free monoids over small alphabets.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psq/word.hpp"

namespace psq {

/// A morphism from {0..k-1}* to {0..m-1}*, given by the images of the letters.
/// Codings (letter-to-letter maps) are the 1-uniform case.
class Morphism
{
public:
    Morphism() = default;

    /// Images are taken over a common target alphabet (0 = infer, at least 2).
    explicit Morphism(std::vector<Word> images, int target_alphabet = 0);

    static Morphism identity(int alphabet_size);

    /// The coding a -> letters[a].
    static Morphism coding(const std::vector<Symbol>& letters, int target_alphabet = 0);

    /// Parses lines of the form "i -> image" (letters in order 0, 1, ...).
    /// Blank lines and lines starting with '#' are ignored.
    static Morphism parse(std::string_view text, int target_alphabet = 0);

    /// Inverse of parse.
    std::string str() const;

    int domain_size() const noexcept { return int(images_.size()); }
    int target_alphabet() const noexcept { return target_alphabet_; }

    const Word& image(Symbol a) const { return images_.at(a); }
    const std::vector<Word>& images() const noexcept { return images_; }

    bool is_nonerasing() const noexcept;

    /// The common image length, if all images have the same length.
    std::optional<std::size_t> uniform_length() const noexcept;

    std::size_t min_image_length() const noexcept;
    std::size_t max_image_length() const noexcept;

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    std::vector<Word> images_;
    int target_alphabet_ = 2;
};

/// h(w[0]) h(w[1]) ... Throws `std::invalid_argument` if a letter of w is
/// outside the domain of h.
Word apply(const Morphism& h, const Word& w);

/// (outer o inner)(a) = outer(inner(a)). Throws `std::invalid_argument` if
/// inner's target alphabet does not fit outer's domain.
Morphism compose(const Morphism& outer, const Morphism& inner);

/// First n symbols of the fixed point h^omega(seed). Throws
/// `std::invalid_argument` unless h(seed) starts with seed and |h(seed)| >= 2.
Word fixed_point_prefix(const Morphism& h, Symbol seed, std::size_t n);

/// Where an image of a letter occurs out of place inside the image of a
/// domain word.
struct SyncCounterexample
{
    Word domain_word;
    Symbol letter = 0;
    std::size_t position = 0; ///< offset of the occurrence inside h(domain_word)
};

/// Smallest domain-word length for which synchronization_check is exhaustive:
/// an occurrence of h(i) touches at most ceil(|h(i)| / min |h(j)|) + 1
/// consecutive images, and one more letter is added for slack.
std::size_t synchronization_span(const Morphism& h);

/// Checks that for every letter i and every domain word w with |w| <= span,
/// each occurrence of h(i) in h(w) starts at an image boundary and is the
/// image of an occurrence of i. span == 0 uses synchronization_span(h).
std::optional<SyncCounterexample> find_desynchronization(const Morphism& h, std::size_t span = 0);

inline bool synchronization_check(const Morphism& h, std::size_t span = 0)
{
    return !find_desynchronization(h, span).has_value();
}

} // namespace psq
