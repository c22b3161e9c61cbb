#include "psq/packed_word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace psq {

PackedBinaryWord::PackedBinaryWord(const Word& w)
{
    append(w.view());
}

void PackedBinaryWord::append(std::span<const Symbol> symbols)
{
    bits_.resize(((size_ + symbols.size()) >> 6) + 2, 0);
    for (Symbol s : symbols) {
        if (s > 1)
            throw std::invalid_argument("PackedBinaryWord: non-binary symbol");
        if (s)
            bits_[size_ >> 6] |= std::uint64_t{1} << (size_ & 63);
        ++size_;
    }
}

void PackedBinaryWord::truncate(std::size_t n)
{
    if (n >= size_)
        return;
    const std::size_t word = n >> 6;
    if (n & 63)
        bits_[word] &= (std::uint64_t{1} << (n & 63)) - 1;
    else
        bits_[word] = 0;
    std::fill(bits_.begin() + word + 1, bits_.end(), 0);
    size_ = n;
}

std::uint64_t PackedBinaryWord::window(std::size_t pos) const noexcept
{
    const std::size_t word = pos >> 6;
    if (word >= bits_.size())
        return 0;
    const unsigned off = pos & 63;
    std::uint64_t v = bits_[word] >> off;
    if (off != 0 && word + 1 < bits_.size())
        v |= bits_[word + 1] << (64 - off);
    return v;
}

// Bit 63 of the result is bit(pos); lower bits walk backwards. Positions
// before the start of the word read as zero.
std::uint64_t PackedBinaryWord::window_ending(std::size_t pos) const noexcept
{
    if (pos >= 63)
        return window(pos - 63);
    return window(0) << (63 - pos);
}

std::size_t PackedBinaryWord::lce_forward(std::size_t i, std::size_t j,
                                          std::size_t limit) const noexcept
{
    std::size_t k = 0;
    while (k < limit) {
        const std::uint64_t diff = window(i + k) ^ window(j + k);
        if (diff != 0)
            return std::min(limit, k + std::countr_zero(diff));
        k += 64;
    }
    return limit;
}

std::size_t PackedBinaryWord::lce_backward(std::size_t i, std::size_t j,
                                           std::size_t limit) const noexcept
{
    std::size_t k = 0;
    while (k < limit) {
        const std::uint64_t diff = window_ending(i - k) ^ window_ending(j - k);
        if (diff != 0)
            return std::min(limit, k + std::countl_zero(diff));
        k += 64;
        if (k > i || k > j)
            break;
    }
    return std::min(limit, std::min(i, j) + 1);
}

std::optional<Repetition> find_violation_ending_after(const PackedBinaryWord& w, std::size_t from,
                                                      const FreenessSpec& spec)
{
    const std::size_t n = w.size();
    const std::uint64_t num = spec.bound.num();
    const std::uint64_t den = spec.bound.den();
    for (std::size_t p = std::max<std::size_t>(spec.min_period, 1); p < n; ++p) {
        // Shortest run of positions i with w[i] == w[i - p] whose repetition
        // (run + p symbols) violates the spec.
        const std::uint64_t excess = std::uint64_t(p) * (num - den);
        std::size_t t = spec.strict ? excess / den + 1 : (excess + den - 1) / den;
        t = std::max<std::size_t>(t, 1);
        if (t + p > n)
            break;
        // A long enough run ending at e >= from covers a multiple of t in
        // [e - t + 1, e].
        std::size_t lo = std::max(p, from >= t - 1 ? from - (t - 1) : 0);
        std::size_t q = (lo + t - 1) / t * t;
        for (; q < n; q += t) {
            if (w.bit(q) != w.bit(q - p))
                continue;
            const std::size_t back = w.lce_backward(q, q - p, q - p + 1);
            const std::size_t fwd = w.lce_forward(q, q - p, n - q);
            const std::size_t run = back + fwd - 1;
            if (run >= t && q + fwd > from) {
                const std::size_t run_start = q + 1 - back; // first matching index
                return Repetition{run_start - p, run + p, p};
            }
        }
    }
    return std::nullopt;
}

} // namespace psq
