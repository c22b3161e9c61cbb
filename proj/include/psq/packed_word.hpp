// packed_word.hpp -- bit-packed binary words for the long scans (images of
// 246-uniform morphisms over tens of thousands of symbols).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "psq/repetition.hpp"
#include "psq/word.hpp"

namespace psq {

class PackedBinaryWord
{
public:
    PackedBinaryWord() = default;
    explicit PackedBinaryWord(const Word& w);

    std::size_t size() const noexcept { return size_; }

    bool bit(std::size_t i) const noexcept { return (bits_[i >> 6] >> (i & 63)) & 1u; }

    /// Appends binary symbols. Throws `std::invalid_argument` on a symbol > 1.
    void append(std::span<const Symbol> symbols);

    /// Shrinks to the first n symbols.
    void truncate(std::size_t n);

    /// Number of consecutive k in [0, limit) with bit(i + k) == bit(j + k).
    std::size_t lce_forward(std::size_t i, std::size_t j, std::size_t limit) const noexcept;

    /// Number of consecutive k in [0, limit) with bit(i - k) == bit(j - k).
    std::size_t lce_backward(std::size_t i, std::size_t j, std::size_t limit) const noexcept;

private:
    std::uint64_t window(std::size_t pos) const noexcept;
    std::uint64_t window_ending(std::size_t pos) const noexcept;

    std::vector<std::uint64_t> bits_ = std::vector<std::uint64_t>(1, 0);
    std::size_t size_ = 0;
};

/// A factor w[start, start + length) with period `period`.
struct Repetition
{
    std::size_t start = 0;
    std::size_t length = 0;
    std::size_t period = 0;
};

/// Looks for a repetition violating `spec` that ends at a position >= from.
/// Equivalent to scanning every (factor, period) pair, but samples each
/// period's match runs at a stride no larger than the shortest violating run.
std::optional<Repetition> find_violation_ending_after(const PackedBinaryWord& w, std::size_t from,
                                                      const FreenessSpec& spec);

} // namespace psq
