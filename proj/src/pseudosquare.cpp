#include "psq/pseudosquare.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <json.hpp>

namespace psq {

std::string_view to_string(PseudosquareKind kind)
{
    switch (kind) {
    case PseudosquareKind::permutation: return "permutation";
    case PseudosquareKind::transformation: return "transformation";
    case PseudosquareKind::morphic: return "morphic";
    }
    return "?";
}

std::string_view to_string(Orientation o)
{
    return o == Orientation::x_then_image ? "x-then-image" : "image-then-x";
}

PseudosquareKind parse_kind(std::string_view text)
{
    if (text == "perm" || text == "permutation")
        return PseudosquareKind::permutation;
    if (text == "trans" || text == "transformation")
        return PseudosquareKind::transformation;
    if (text == "morphic")
        return PseudosquareKind::morphic;
    throw std::invalid_argument("unknown pseudosquare kind '" + std::string(text) + "'");
}

Word PseudosquareHit::factor() const
{
    const Word image = apply(witness, x);
    return orientation == Orientation::x_then_image ? x + image : image + x;
}

std::string PseudosquareHit::json() const
{
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(kind));
    j["position"] = position;
    j["x"] = x.str();
    j["orientation"] = std::string(to_string(orientation));
    auto images = nlohmann::json::array();
    for (const Word& img : witness.images())
        images.push_back(img.str());
    j["witness"] = images;
    j["factor"] = factor().str();
    return j.dump();
}

bool coding_maps(std::span<const Symbol> x, std::span<const Symbol> y, bool bijective)
{
    std::array<Symbol, 256> fwd;
    std::array<Symbol, 256> inv;
    fwd.fill(0xff);
    inv.fill(0xff);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Symbol a = x[i];
        const Symbol b = y[i];
        if (fwd[a] == 0xff)
            fwd[a] = b;
        else if (fwd[a] != b)
            return false;
        if (bijective) {
            if (inv[b] == 0xff)
                inv[b] = a;
            else if (inv[b] != a)
                return false;
        }
    }
    return true;
}

namespace {

// The least coding (in image order) that sends x onto y, completed on the
// letters x does not use.
Morphism least_coding(const Word& x, const Word& y, int alphabet, bool bijective)
{
    std::vector<int> fwd(alphabet, -1);
    std::vector<bool> used(alphabet, false);
    for (std::size_t i = 0; i < x.size(); ++i) {
        fwd[x[i]] = y[i];
        used[y[i]] = true;
    }
    std::vector<Symbol> letters(alphabet);
    for (int a = 0; a < alphabet; ++a) {
        if (fwd[a] >= 0) {
            letters[a] = Symbol(fwd[a]);
            continue;
        }
        if (!bijective) {
            letters[a] = 0;
            continue;
        }
        int b = 0;
        while (used[b])
            ++b;
        used[b] = true;
        letters[a] = Symbol(b);
    }
    return Morphism::coding(letters, alphabet);
}

struct Segment
{
    std::size_t start = 0;
    std::size_t len = 0;
    bool set = false;
};

// Exhaustive backtracking for morphism_match over arbitrary alphabets.
struct Matcher
{
    std::span<const Symbol> x;
    std::span<const Symbol> y;
    const MatchBudget& budget;
    std::vector<int> remaining_new; // letters of x[i..] not yet assigned, as a count of occurrences
    std::vector<Segment> images;
    std::size_t assigned_total = 0;
    std::size_t absent_cost = 0;
    std::optional<std::vector<Segment>> best;

    bool better(const std::vector<Segment>& a, const std::vector<Segment>& b) const
    {
        for (std::size_t c = 0; c < a.size(); ++c) {
            const auto sa = y.subspan(a[c].start, a[c].len);
            const auto sb = y.subspan(b[c].start, b[c].len);
            if (std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end()))
                return true;
            if (std::lexicographical_compare(sb.begin(), sb.end(), sa.begin(), sa.end()))
                return false;
        }
        return false;
    }

    // Minimal number of y symbols still needed by x[i..] given current images.
    std::size_t min_needed(std::size_t i) const
    {
        std::size_t need = 0;
        const std::size_t floor_len = budget.require_nonerasing ? 1 : 0;
        for (std::size_t k = i; k < x.size(); ++k)
            need += images[x[k]].set ? images[x[k]].len : floor_len;
        return need;
    }

    void run(std::size_t i, std::size_t offset)
    {
        if (i == x.size()) {
            if (offset == y.size() && (!best || better(images, *best)))
                best = images;
            return;
        }
        if (min_needed(i) > y.size() - offset)
            return;
        Segment& seg = images[x[i]];
        if (seg.set) {
            if (offset + seg.len > y.size())
                return;
            if (!std::equal(y.begin() + seg.start, y.begin() + seg.start + seg.len,
                            y.begin() + offset))
                return;
            run(i + 1, offset + seg.len);
            return;
        }
        const std::size_t lo = budget.require_nonerasing ? 1 : 0;
        for (std::size_t len = lo; offset + len <= y.size(); ++len) {
            if (assigned_total + len + absent_cost > budget.max_total_image)
                break;
            seg = Segment{offset, len, true};
            assigned_total += len;
            run(i + 1, offset + len);
            assigned_total -= len;
            seg.set = false;
        }
    }
};

} // namespace

bool binary_morphism_matches(std::span<const Symbol> x, std::span<const Symbol> y,
                             const MatchBudget& budget)
{
    std::size_t count[2] = {0, 0};
    std::size_t first[2] = {SIZE_MAX, SIZE_MAX};
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (first[x[i]] == SIZE_MAX)
            first[x[i]] = i;
        ++count[x[i]];
    }
    const std::size_t floor_len = budget.require_nonerasing ? 1 : 0;
    const std::size_t n = y.size();
    auto verify = [&](std::size_t l0, std::size_t l1) {
        const std::size_t len[2] = {l0, l1};
        std::size_t def[2] = {SIZE_MAX, SIZE_MAX};
        std::size_t off = 0;
        for (Symbol a : x) {
            if (def[a] == SIZE_MAX)
                def[a] = off;
            else if (!std::equal(y.begin() + def[a], y.begin() + def[a] + len[a], y.begin() + off))
                return false;
            off += len[a];
        }
        return true;
    };
    if (count[0] == 0 || count[1] == 0) {
        const Symbol a = count[0] == 0 ? 1 : 0;
        if (count[a] == 0 || n % count[a] != 0)
            return false;
        const std::size_t l = n / count[a];
        if (l < floor_len || l + floor_len > budget.max_total_image)
            return false;
        return a == 0 ? verify(l, 0) : verify(0, l);
    }
    for (std::size_t l0 = floor_len; count[0] * l0 <= n; ++l0) {
        if (l0 + floor_len > budget.max_total_image)
            break;
        const std::size_t rest = n - count[0] * l0;
        if (rest % count[1] != 0)
            continue;
        const std::size_t l1 = rest / count[1];
        if (l1 < floor_len || l0 + l1 > budget.max_total_image)
            continue;
        if (verify(l0, l1))
            return true;
    }
    return false;
}

std::optional<Morphism> morphism_match(const Word& x, const Word& y, const MatchBudget& budget)
{
    if (x.empty())
        throw std::invalid_argument("morphism_match: x must be nonempty");
    const int alphabet = x.alphabet_size();
    if (budget.require_nonerasing && y.size() < x.size())
        return std::nullopt;

    std::vector<bool> present(alphabet, false);
    for (Symbol a : x)
        present[a] = true;
    const std::size_t absent =
        std::size_t(std::count(present.begin(), present.end(), false));
    const std::size_t absent_cost = budget.require_nonerasing ? absent : 0;

    Matcher m{x.view(), y.view(), budget, {}, std::vector<Segment>(alphabet), 0, absent_cost, {}};
    m.run(0, 0);
    if (!m.best)
        return std::nullopt;

    const int target = std::max(y.alphabet_size(), 2);
    std::vector<Word> images;
    for (int a = 0; a < alphabet; ++a) {
        const Segment& s = (*m.best)[a];
        if (s.set)
            images.push_back(y.factor(s.start, s.len).with_alphabet(target));
        else if (budget.require_nonerasing)
            images.push_back(Word({0}, target));
        else
            images.push_back(Word(std::vector<Symbol>{}, target));
    }
    return Morphism(std::move(images), target);
}

namespace {

std::optional<PseudosquareHit> find_coding_pseudosquare(const Word& w, std::size_t min_len,
                                                        bool bijective, bool bidirectional)
{
    if (min_len < 1)
        throw std::invalid_argument("pseudosquare scan needs min_len >= 1");
    const std::size_t n = w.size();
    const auto v = w.view();
    const PseudosquareKind kind =
        bijective ? PseudosquareKind::permutation : PseudosquareKind::transformation;
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t len = min_len; pos + 2 * len <= n; ++len) {
            const auto first = v.subspan(pos, len);
            const auto second = v.subspan(pos + len, len);
            if (coding_maps(first, second, bijective)) {
                const Word x = w.factor(pos, len);
                return PseudosquareHit{pos, x,
                                       least_coding(x, w.factor(pos + len, len), w.alphabet_size(),
                                                    bijective),
                                       kind, Orientation::x_then_image};
            }
            if (bidirectional && coding_maps(second, first, bijective)) {
                const Word x = w.factor(pos + len, len);
                return PseudosquareHit{pos, x,
                                       least_coding(x, w.factor(pos, len), w.alphabet_size(),
                                                    bijective),
                                       kind, Orientation::image_then_x};
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<PseudosquareHit> find_permutation_pseudosquare(const Word& w, std::size_t min_len)
{
    return find_coding_pseudosquare(w, min_len, true, false);
}

std::optional<PseudosquareHit> find_transformation_pseudosquare(const Word& w, std::size_t min_len,
                                                                bool bidirectional)
{
    return find_coding_pseudosquare(w, min_len, false, bidirectional);
}

std::optional<PseudosquareHit> find_morphic_pseudosquare(const Word& w, std::size_t min_len,
                                                         std::size_t max_len,
                                                         const MatchBudget& budget)
{
    if (min_len < 1 || min_len > max_len)
        throw std::invalid_argument("find_morphic_pseudosquare: need 1 <= min_len <= max_len");
    const std::size_t n = w.size();
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t len = min_len; len <= max_len && pos + len <= n; ++len) {
            const Word x = w.factor(pos, len);
            const std::size_t room = n - pos - len;
            const std::size_t lo = budget.require_nonerasing ? len : 0;
            for (std::size_t ylen = lo; ylen <= room; ++ylen) {
                auto h = morphism_match(x, w.factor(pos + len, ylen), budget);
                if (h)
                    return PseudosquareHit{pos, x, std::move(*h), PseudosquareKind::morphic,
                                           Orientation::x_then_image};
            }
        }
    }
    return std::nullopt;
}

bool coding_pseudosquare_at_end(std::span<const Symbol> w, std::size_t min_len, bool bijective,
                                bool bidirectional)
{
    const std::size_t n = w.size();
    for (std::size_t len = std::max<std::size_t>(min_len, 1); 2 * len <= n; ++len) {
        const auto first = w.subspan(n - 2 * len, len);
        const auto second = w.subspan(n - len, len);
        if (coding_maps(first, second, bijective))
            return true;
        if (bidirectional && coding_maps(second, first, bijective))
            return true;
    }
    return false;
}

bool morphic_pseudosquare_at_end(std::span<const Symbol> w, std::size_t min_len,
                                 std::size_t max_len, const MatchBudget& budget)
{
    const std::size_t n = w.size();
    const bool binary = std::all_of(w.begin(), w.end(), [](Symbol s) { return s <= 1; });
    for (std::size_t ylen = budget.require_nonerasing ? 1 : 0; ylen < n; ++ylen) {
        for (std::size_t len = std::max<std::size_t>(min_len, 1); len <= max_len; ++len) {
            if (len + ylen > n || (budget.require_nonerasing && len > ylen))
                break;
            const auto x = w.subspan(n - ylen - len, len);
            const auto y = w.subspan(n - ylen, ylen);
            if (binary) {
                if (binary_morphism_matches(x, y, budget))
                    return true;
            } else {
                const Word wx(std::vector<Symbol>(x.begin(), x.end()));
                const Word wy(std::vector<Symbol>(y.begin(), y.end()));
                if (morphism_match(wx, wy, budget))
                    return true;
            }
        }
    }
    return false;
}

} // namespace psq
