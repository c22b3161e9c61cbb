// The check battery for the 246-uniform morphism m246: the binary word m(u),
// u any (7/4+)-free ternary word, avoids x h(x) for |x| >= 5.

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <string>

#include "psq/generator.hpp"
#include "psq/packed_word.hpp"
#include "psq/parallel.hpp"
#include "psq/pseudosquare.hpp"
#include "psq/repetition.hpp"
#include "psq/verifier.hpp"

namespace psq {

Theorem10Stage parse_theorem10_stage(std::string_view text)
{
    if (text == "props")
        return Theorem10Stage::props;
    if (text == "ochem44")
        return Theorem10Stage::ochem44;
    if (text == "antisquare_scan")
        return Theorem10Stage::antisquare_scan;
    if (text == "morphic_scan")
        return Theorem10Stage::morphic_scan;
    if (text == "all")
        return Theorem10Stage::all;
    throw std::invalid_argument("unknown stage '" + std::string(text) + "'");
}

namespace {

FreenessSpec eleven_sixths_spec()
{
    return FreenessSpec{Exponent(11, 6), true, 4};
}

struct Image
{
    Word domain_word;
    Word image;
};

// m(u) for every (7/4+)-free ternary u of length n. Any factor of the
// infinite word of length <= (n - 2) * 246 + 2 lies in one of these, and
// every factor of length <= (n - 1) * 246 + 1 starts in some first block.
std::vector<Image> universe(const Morphism& m, std::size_t n)
{
    std::vector<Image> out;
    dejean_free_ternary(n, [&](std::span<const Symbol> u) {
        Word d(std::vector<Symbol>(u.begin(), u.end()), 3);
        out.push_back({d, apply(m, d)});
        return true;
    });
    return out;
}

bool contains_any(const std::string& s, std::initializer_list<const char*> patterns)
{
    for (const char* p : patterns)
        if (s.find(p) != std::string::npos)
            return true;
    return false;
}

VerificationReport stage_props(const Morphism& m)
{
    VerificationReport r;
    r.claim_id = "thm10:props";
    const std::size_t n = 4;
    const FreenessSpec spec = eleven_sixths_spec();
    const std::vector<Image> images = universe(m, n);
    r.parameters["domain_length"] = n;
    r.parameters["freeness"] = spec.str();

    WordSet squares;
    std::set<std::string> cubes;
    std::size_t boundary_cubes = 0;
    std::map<std::size_t, std::set<std::string>> factors = {
        {5, {}}, {6, {}}, {7, {}}, {17, {}}, {98, {}}};
    const char* absent[] = {"01010", "10101", "00100", "1101100", "1011010010"};

    for (const Image& img : images) {
        const Word& w = img.image;
        const std::string s = w.str();
        if (!is_en_free(w, spec))
            r.fail("a_freeness", {{"domain_word", img.domain_word.str()}});
        const WordSet sq = distinct_squares(w);
        squares.insert(sq.begin(), sq.end());

        for (std::size_t p = 1; 3 * p <= w.size(); ++p) {
            std::size_t run = 0;
            for (std::size_t i = 0; i + p < w.size(); ++i) {
                run = w[i] == w[i + p] ? run + 1 : 0;
                if (run < 2 * p)
                    continue;
                const std::size_t start = i + 1 - 2 * p;
                cubes.insert(s.substr(start, 3 * p));
                if (p != 1)
                    continue;
                if (start < 2) {
                    ++boundary_cubes;
                    continue;
                }
                if (!(w[start - 1] != w[start] && w[start - 2] == w[start - 1]))
                    r.fail("b_left_extension", {{"domain_word", img.domain_word.str()},
                                                {"position", start},
                                                {"context", s.substr(start - 2, 5)}});
            }
        }

        for (const char* f : absent)
            if (s.find(f) != std::string::npos)
                r.fail("c_absent_factor", {{"factor", f}, {"domain_word", img.domain_word.str()}});

        for (auto& [len, set] : factors)
            for (std::size_t i = 0; i + len <= s.size(); ++i)
                set.insert(s.substr(i, len));
    }

    const WordSet expected_squares = [] {
        WordSet e;
        for (const char* x : {"00", "11", "0101", "1010", "010010", "101101", "110110"})
            e.insert(Word::parse(x, 2));
        return e;
    }();
    for (const Word& sq : squares)
        if (!expected_squares.contains(sq))
            r.fail("a_square_list", {{"unexpected", sq.str()}});
    for (const Word& sq : expected_squares)
        if (!squares.contains(sq))
            r.fail("a_square_list", {{"missing", sq.str()}});

    for (const std::string& c : cubes)
        if (c != "000" && c != "111")
            r.fail("b_cube_list", {{"unexpected", c}});

    for (const std::string& f : factors[17])
        r.require(contains_any(f, {"00111", "11000"}), "d_length17", {{"factor", f}});
    for (const std::string& f : factors[98])
        r.require(f.find("11011") != std::string::npos, "e_length98", {{"factor", f}});

    const std::initializer_list<const char*> patterns = {"0011", "1100", "0101", "1010",
                                                         "1001", "0110", "10001", "01110"};
    const std::set<std::string> exceptions = {"00010", "11101", "111011", "11011"};
    std::size_t exempt_seen = 0;
    for (std::size_t len : {5, 6, 7}) {
        for (const std::string& f : factors[len]) {
            if (contains_any(f, patterns))
                continue;
            if (len < 7 && exceptions.contains(f)) {
                ++exempt_seen;
                continue;
            }
            r.fail("f_patterns", {{"factor", f}});
        }
    }

    r.evidence["domain_words"] = images.size();
    r.evidence["squares"] = nlohmann::ordered_json::array();
    for (const Word& sq : squares)
        r.evidence["squares"].push_back(sq.str());
    r.evidence["cubes"] = cubes;
    r.evidence["cube_occurrences_without_left_context"] = boundary_cubes;
    r.evidence["f_exceptions_seen"] = exempt_seen;
    nlohmann::ordered_json counts;
    for (const auto& [len, set] : factors)
        counts[std::to_string(len)] = set.size();
    r.evidence["distinct_factor_counts"] = counts;
    return r;
}

// Images of every (7/4+)-free ternary word of length < 44 must be
// (11/6+, 4)-free. Each DFS node appends one block and only looks for
// violations ending inside it.
struct OchemWalker
{
    const Morphism& m;
    const FreenessSpec spec;
    const FreenessSpec dejean;
    std::size_t max_len;
    std::vector<Symbol> u;
    PackedBinaryWord image;
    std::uint64_t nodes = 0;
    std::optional<std::pair<std::vector<Symbol>, Repetition>> failure;

    // Pushes letter c; false if u c is not (7/4+)-free.
    bool push(Symbol c)
    {
        u.push_back(c);
        if (!en_free_at_end(u, dejean)) {
            u.pop_back();
            return false;
        }
        ++nodes;
        const std::size_t from = image.size();
        image.append(m.image(c).symbols());
        if (auto rep = find_violation_ending_after(image, from, spec))
            failure = std::make_pair(u, *rep);
        return true;
    }

    void pop()
    {
        u.pop_back();
        image.truncate(u.size() * m.image(0).size());
    }

    void walk()
    {
        if (failure || u.size() >= max_len)
            return;
        for (int c = 0; c < 3 && !failure; ++c) {
            if (!push(Symbol(c)))
                continue;
            if (!failure)
                walk();
            if (!failure)
                pop();
        }
    }

    void frontier(std::size_t depth, std::vector<std::vector<Symbol>>& out)
    {
        if (failure)
            return;
        if (u.size() == depth) {
            out.push_back(u);
            return;
        }
        for (int c = 0; c < 3 && !failure; ++c) {
            if (!push(Symbol(c)))
                continue;
            if (!failure) {
                frontier(depth, out);
                pop();
            }
        }
    }
};

VerificationReport stage_ochem(const Morphism& m, const SearchOptions& options)
{
    VerificationReport r;
    r.claim_id = "thm10:ochem44";
    const std::size_t max_len = 43;
    const std::size_t split = 8;
    r.parameters["max_domain_length"] = max_len;
    r.parameters["freeness"] = eleven_sixths_spec().str();
    r.parameters["domain_freeness"] = dejean_ternary_spec().str();

    auto failure_json = [&](const std::pair<std::vector<Symbol>, Repetition>& f) {
        return nlohmann::ordered_json{{"domain_word", Word(f.first, 3).str()},
                                      {"start", f.second.start},
                                      {"length", f.second.length},
                                      {"period", f.second.period}};
    };

    OchemWalker root{m, eleven_sixths_spec(), dejean_ternary_spec(), max_len, {}, {}, 0, {}};
    std::vector<std::vector<Symbol>> tasks;
    root.frontier(split, tasks);
    if (root.failure) {
        r.fail("freeness", failure_json(*root.failure));
        return r;
    }

    struct Result
    {
        std::uint64_t nodes = 0;
        std::optional<std::pair<std::vector<Symbol>, Repetition>> failure;
    };
    std::vector<Result> results(tasks.size());
    std::atomic<std::size_t> first_failure{SIZE_MAX};
    std::atomic<std::size_t> finished{0};
    run_tasks(
        tasks.size(), options.workers,
        [&](std::size_t i) {
            OchemWalker w{m, eleven_sixths_spec(), dejean_ternary_spec(), max_len, {}, {}, 0, {}};
            for (Symbol c : tasks[i]) {
                w.u.push_back(c);
                w.image.append(m.image(c).symbols());
            }
            w.walk();
            results[i] = {w.nodes, w.failure};
            if (w.failure) {
                std::size_t cur = first_failure.load();
                while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
                }
            }
            const std::size_t f = ++finished;
            if (options.progress && (f % 64 == 0 || f == tasks.size()))
                options.progress("ochem44: " + std::to_string(f) + "/" +
                                 std::to_string(tasks.size()) + " subtrees");
        },
        [&](std::size_t i) { return i > first_failure.load(); });

    std::uint64_t nodes = root.nodes;
    for (std::size_t i = 0; i < results.size(); ++i) {
        nodes += results[i].nodes;
        if (results[i].failure) {
            r.fail("freeness", failure_json(*results[i].failure));
            break;
        }
    }
    if (r.passed)
        r.evidence["domain_words"] = nodes;
    return r;
}

VerificationReport stage_antisquares(const Morphism& m)
{
    VerificationReport r;
    r.claim_id = "thm10:antisquare_scan";
    const std::size_t lo = 17;
    const std::size_t hi = 97;
    const std::size_t q = m.image(0).size();
    const std::size_t n = 3;
    const std::vector<Image> images = universe(m, n);
    r.parameters["min_order"] = lo;
    r.parameters["max_order"] = hi;
    r.parameters["domain_length"] = n;
    std::uint64_t checked = 0;
    for (const Image& img : images) {
        const Word& w = img.image;
        for (std::size_t s = 0; s < q; ++s) {
            for (std::size_t len = lo; len <= hi && s + 2 * len <= w.size(); ++len) {
                ++checked;
                std::size_t k = 0;
                while (k < len && w[s + k] != w[s + len + k])
                    ++k;
                if (k == len)
                    r.fail("antisquare", {{"domain_word", img.domain_word.str()},
                                          {"position", s},
                                          {"factor", w.factor(s, 2 * len).str()}});
            }
        }
    }
    r.evidence["domain_words"] = images.size();
    r.evidence["candidates_checked"] = checked;
    return r;
}

VerificationReport stage_morphic(const Morphism& m)
{
    VerificationReport r;
    r.claim_id = "thm10:morphic_scan";
    const std::size_t lo = 5;
    const std::size_t hi = 16;
    const std::size_t budget_total = 33;
    const std::size_t q = m.image(0).size();
    const std::size_t n = 4;
    const std::vector<Image> images = universe(m, n);
    MatchBudget budget;
    budget.max_total_image = budget_total;
    r.parameters["min_x"] = lo;
    r.parameters["max_x"] = hi;
    r.parameters["max_total_image"] = budget_total;
    r.parameters["domain_length"] = n;

    std::uint64_t checked = 0;
    for (const Image& img : images) {
        const std::span<const Symbol> w = img.image.symbols();
        for (std::size_t s = 0; s < q; ++s) {
            for (std::size_t len = lo; len <= hi; ++len) {
                const auto x = w.subspan(s, len);
                const std::size_t max_y = len * (budget_total - 1);
                for (std::size_t ylen = len; ylen <= max_y && s + len + ylen <= w.size(); ++ylen) {
                    ++checked;
                    const auto y = w.subspan(s + len, ylen);
                    if (!binary_morphism_matches(x, y, budget))
                        continue;
                    const Word wx(std::vector<Symbol>(x.begin(), x.end()), 2);
                    const Word wy(std::vector<Symbol>(y.begin(), y.end()), 2);
                    const auto h = morphism_match(wx, wy, budget);
                    r.fail("morphic_pseudosquare",
                           {{"domain_word", img.domain_word.str()},
                            {"position", s},
                            {"x", wx.str()},
                            {"image", wy.str()},
                            {"morphism", h ? h->str() : std::string()}});
                    return r;
                }
            }
        }
    }
    r.evidence["domain_words"] = images.size();
    r.evidence["candidates_checked"] = checked;
    return r;
}

} // namespace

VerificationReport verify_theorem10(Theorem10Stage stage, const SearchOptions& options)
{
    const Morphism& m = catalog_lookup("m246").morphism;
    switch (stage) {
    case Theorem10Stage::props:
        return stage_props(m);
    case Theorem10Stage::ochem44:
        return stage_ochem(m, options);
    case Theorem10Stage::antisquare_scan:
        return stage_antisquares(m);
    case Theorem10Stage::morphic_scan:
        return stage_morphic(m);
    case Theorem10Stage::all:
        break;
    }
    VerificationReport r;
    r.claim_id = "thm10:all";
    r.absorb("props", stage_props(m));
    r.absorb("ochem44", stage_ochem(m, options));
    r.absorb("antisquare_scan", stage_antisquares(m));
    r.absorb("morphic_scan", stage_morphic(m));
    return r;
}

} // namespace psq
