#include "psq/repetition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace psq {

Exponent::Exponent(std::uint64_t num, std::uint64_t den)
{
    if (den == 0)
        throw std::invalid_argument("exponent with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

Exponent Exponent::parse(std::string_view text)
{
    auto number = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("bad exponent '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Exponent(number(text), 1);
    return Exponent(number(text.substr(0, slash)), number(text.substr(slash + 1)));
}

std::string Exponent::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

void FreenessSpec::validate() const
{
    if (bound <= Exponent(1, 1))
        throw std::invalid_argument("freeness bound must exceed 1");
    if (min_period < 1)
        throw std::invalid_argument("freeness min_period must be at least 1");
}

std::string FreenessSpec::str() const
{
    std::string s = bound.str();
    if (strict)
        s += "+";
    if (min_period > 1)
        s += "," + std::to_string(min_period);
    return s;
}

FreenessSpec FreenessSpec::parse(std::string_view text)
{
    FreenessSpec spec;
    const auto comma = text.find(',');
    if (comma != std::string_view::npos) {
        const std::string_view tail = text.substr(comma + 1);
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
        if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty())
            throw std::invalid_argument("bad freeness spec '" + std::string(text) + "'");
        spec.min_period = n;
        text = text.substr(0, comma);
    }
    spec.strict = !text.empty() && text.back() == '+';
    if (spec.strict)
        text.remove_suffix(1);
    spec.bound = Exponent::parse(text);
    spec.validate();
    return spec;
}

std::size_t smallest_period(const Word& u)
{
    if (u.empty())
        throw std::invalid_argument("smallest_period of empty word");
    // Border array: the period is |u| minus the longest proper border.
    const std::size_t n = u.size();
    std::vector<std::size_t> border(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && u[i] != u[k])
            k = border[k];
        if (u[i] == u[k])
            ++k;
        border[i + 1] = k;
    }
    return n - border[n];
}

Exponent critical_exponent(const Word& w)
{
    if (w.empty())
        throw std::invalid_argument("critical_exponent of empty word");
    // The maximal repetition with period p is a maximal run of positions with
    // w[i] == w[i + p]; its exponent is (run + p) / p. Non-smallest periods
    // only produce smaller exponents for the same factor.
    Exponent best(1, 1);
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            run = w[i] == w[i + p] ? run + 1 : 0;
            if (run > 0) {
                Exponent e(run + p, p);
                if (e > best)
                    best = e;
            }
        }
    }
    return best;
}

bool is_en_free(const Word& w, const FreenessSpec& spec)
{
    spec.validate();
    const std::size_t n = w.size();
    for (std::size_t p = spec.min_period; p < n; ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            run = w[i] == w[i + p] ? run + 1 : 0;
            if (run > 0 && spec.violated_by(run + p, p))
                return false;
        }
    }
    return true;
}

Exponent max_fractional_power(const Word& w, const Word& x)
{
    if (x.empty())
        throw std::invalid_argument("max_fractional_power with empty x");
    const std::size_t n = w.size();
    const std::size_t m = x.size();
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t len = 0;
        while (i + len < n && w[i + len] == x[len % m])
            ++len;
        best = std::max(best, len);
    }
    if (best < m)
        return Exponent(0, 1);
    return Exponent(best, m);
}

bool en_free_at_end(std::span<const Symbol> w, const FreenessSpec& spec)
{
    const std::size_t n = w.size();
    if (n < 2)
        return true;
    const std::size_t last = n - 1;
    for (std::size_t p = spec.min_period; p < n; ++p) {
        std::size_t run = 0;
        while (run + p <= last && w[last - run] == w[last - run - p])
            ++run;
        if (run > 0 && spec.violated_by(run + p, p))
            return false;
    }
    return true;
}

bool square_at_end(std::span<const Symbol> w)
{
    const std::size_t n = w.size();
    for (std::size_t half = 1; 2 * half <= n; ++half) {
        std::size_t j = 0;
        while (j < half && w[n - 1 - j] == w[n - 1 - j - half])
            ++j;
        if (j == half)
            return true;
    }
    return false;
}

} // namespace psq
