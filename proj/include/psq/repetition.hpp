// repetition.hpp -- periods, fractional powers and (e, n)-freeness.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "psq/word.hpp"

namespace psq {

/// An exact positive rational |u| / p, kept in lowest terms.
class Exponent
{
public:
    constexpr Exponent() = default;
    /// Throws `std::invalid_argument` if den == 0.
    Exponent(std::uint64_t num, std::uint64_t den);

    /// Parses "p/q" or "p".
    static Exponent parse(std::string_view text);

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept
    {
        const unsigned __int128 l = (unsigned __int128)a.num_ * b.den_;
        const unsigned __int128 r = (unsigned __int128)b.num_ * a.den_;
        return l <=> r;
    }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// Forbids factors x^f with |x| >= min_period and f > bound (strict, the
/// "e+" form) or f >= bound (non-strict).
struct FreenessSpec
{
    Exponent bound;
    bool strict = true;
    std::size_t min_period = 1;

    /// Throws `std::invalid_argument` unless bound > 1 and min_period >= 1.
    void validate() const;

    /// Does a factor of the given length with the given period violate these bounds?
    bool violated_by(std::size_t length, std::size_t period) const noexcept
    {
        if (period < min_period)
            return false;
        const unsigned __int128 l = (unsigned __int128)length * bound.den();
        const unsigned __int128 r = (unsigned __int128)bound.num() * period;
        return strict ? l > r : l >= r;
    }

    /// "7/4+" or "2", with ",n" appended when min_period > 1.
    std::string str() const;

    /// Inverse of str(): "p/q" is non-strict, "p/q+" strict, ",n" sets
    /// min_period.
    static FreenessSpec parse(std::string_view text);
};

/// Least p >= 1 with u[i] = u[i + p] for all valid i. Throws on empty u.
std::size_t smallest_period(const Word& u);

/// max over nonempty factors u of |u| / smallest_period(u). Throws on empty w.
Exponent critical_exponent(const Word& w);

/// True iff no factor of w has a period (any period, not only the smallest)
/// that violates `spec`.
bool is_en_free(const Word& w, const FreenessSpec& spec);

/// Largest e such that x^e (x repeated, possibly ending in a proper prefix of
/// x) occurs in w; zero when x does not occur. Throws on empty x.
Exponent max_fractional_power(const Word& w, const Word& x);

/// Incremental form of is_en_free: given that w without its last symbol is
/// free, is w still free? Only repetitions ending at the last position are
/// examined.
bool en_free_at_end(std::span<const Symbol> w, const FreenessSpec& spec);

/// True iff some square ends at the last position of w.
bool square_at_end(std::span<const Symbol> w);

} // namespace psq
