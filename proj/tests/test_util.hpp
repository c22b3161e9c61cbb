// Brute-force oracles and word generators shared by the unit tests.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <random>

#include "psq/morphism.hpp"
#include "psq/word.hpp"

namespace psq::testing {

inline bool naive_square(const Word& u)
{
    if (u.size() % 2)
        return false;
    const std::size_t h = u.size() / 2;
    for (std::size_t i = 0; i < h; ++i)
        if (u[i] != u[i + h])
            return false;
    return u.size() > 0;
}

inline bool naive_antisquare(const Word& u)
{
    if (u.size() % 2 || u.empty())
        return false;
    const std::size_t h = u.size() / 2;
    for (std::size_t i = 0; i < h; ++i)
        if (u[i] == u[i + h])
            return false;
    return true;
}

inline WordSet brute_squares(const Word& w)
{
    WordSet out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 2; i + len <= w.size(); len += 2)
            if (naive_square(w.factor(i, len)))
                out.insert(w.factor(i, len));
    return out;
}

inline WordSet brute_antisquares(const Word& w)
{
    WordSet out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 2; i + len <= w.size(); len += 2)
            if (naive_antisquare(w.factor(i, len)))
                out.insert(w.factor(i, len));
    return out;
}

/// Smallest p with u[i] == u[i+p] for all i, by definition.
inline std::size_t naive_period(const Word& u)
{
    for (std::size_t p = 1; p < u.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < u.size() && ok; ++i)
            ok = u[i] == u[i + p];
        if (ok)
            return p;
    }
    return u.size();
}

inline bool has_period(const Word& u, std::size_t p)
{
    for (std::size_t i = 0; i + p < u.size(); ++i)
        if (u[i] != u[i + p])
            return false;
    return true;
}

/// Calls f on every word over {0..k-1} of length 1..n.
inline void for_all_words(int k, std::size_t n, const std::function<void(const Word&)>& f)
{
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < len; ++i)
            total *= std::size_t(k);
        std::vector<Symbol> s(len);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t rest = code;
            for (std::size_t i = len; i-- > 0; rest /= std::size_t(k))
                s[i] = Symbol(rest % std::size_t(k));
            f(Word(s, std::max(k, 2)));
        }
    }
}

inline Word random_word(std::mt19937& rng, int k, std::size_t n)
{
    std::vector<Symbol> s(n);
    for (Symbol& c : s)
        c = Symbol(rng() % unsigned(k));
    return Word(s, std::max(k, 2));
}

// All morphisms of {0,1} given by image lengths, read off y directly; the
// lexicographically least tuple of image strings wins.
inline std::optional<std::vector<std::string>> brute_morphism_match(const Word& x, const Word& y, std::size_t budget,
                                                                    bool nonerasing)
{
    bool present[2] = {false, false};
    for (Symbol a : x)
        present[a] = true;
    const std::size_t lo = nonerasing ? 1 : 0;
    std::optional<std::vector<std::string>> best;
    for (std::size_t l0 = lo; l0 <= y.size(); ++l0)
        for (std::size_t l1 = lo; l1 <= y.size(); ++l1) {
            const std::size_t len[2] = {present[0] ? l0 : lo, present[1] ? l1 : lo};
            if ((!present[0] && l0 != lo) || (!present[1] && l1 != lo))
                continue;
            if (len[0] + len[1] > budget)
                continue;
            std::vector<std::string> img(2);
            bool have[2] = {false, false};
            std::size_t off = 0;
            bool ok = true;
            for (Symbol a : x) {
                if (off + len[a] > y.size()) {
                    ok = false;
                    break;
                }
                const std::string piece = y.factor(off, len[a]).str();
                if (have[a] && img[a] != piece) {
                    ok = false;
                    break;
                }
                img[a] = piece;
                have[a] = true;
                off += len[a];
            }
            if (!ok || off != y.size())
                continue;
            for (int a = 0; a < 2; ++a)
                if (!present[a])
                    img[a] = nonerasing ? "0" : "";
            if (!best || img < *best)
                best = img;
        }
    return best;
}

inline std::vector<std::string> image_strings(const Morphism& h)
{
    std::vector<std::string> out;
    for (const Word& w : h.images())
        out.push_back(w.str());
    return out;
}

} // namespace psq::testing

using namespace psq::testing;
