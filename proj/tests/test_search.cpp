#include <doctest.h>

#include <random>
#include <stdexcept>

#include "psq/catalog.hpp"
#include "psq/search.hpp"
#include "test_util.hpp"

using namespace psq;

namespace {

// Longest binary word of length <= n whose inventory fits (a, b); the
// lexicographically least one among those of maximal length.
std::pair<std::size_t, std::string> brute_longest(std::size_t a, std::size_t b, std::size_t n)
{
    std::size_t best = 0;
    std::string word;
    for_all_words(2, n, [&](const Word& w) {
        if (w.size() <= best)
            return;
        if (brute_squares(w).size() <= a && brute_antisquares(w).size() <= b) {
            best = w.size();
            word = w.str();
        }
    });
    return {best, word};
}

void walk(SearchState& s, std::size_t depth, const std::function<void()>& visit)
{
    visit();
    if (s.size() == depth)
        return;
    for (int c = 0; c < s.symbol_limit(); ++c)
        if (s.push(Symbol(c))) {
            walk(s, depth, visit);
            s.pop();
        }
}

} // namespace

TEST_CASE("incremental inventories agree with recomputation on all binary words up to 12")
{
    SearchConstraint c;
    c.max_squares = SIZE_MAX;
    c.max_antisquares = SIZE_MAX;
    SearchState s(c, 2);
    std::size_t visited = 0;
    walk(s, 12, [&] {
        ++visited;
        const Word w = s.to_word();
        REQUIRE(s.squares() == brute_squares(w));
        REQUIRE(s.antisquares() == brute_antisquares(w));
    });
    CHECK(visited == (1u << 13) - 1);
}

TEST_CASE("a rejected push leaves the state unchanged")
{
    std::mt19937 rng(17);
    const SearchConstraint c = SearchConstraint::squares_antisquares(2, 3);
    SearchState s(c, 2);
    for (int iter = 0; iter < 3000; ++iter) {
        const Word before = s.to_word();
        const std::size_t sq = s.square_count();
        const std::size_t an = s.antisquare_count();
        const Symbol next = Symbol(rng() % 2);
        const Word extended = before + Word({next}, 2);
        const bool fits = brute_squares(extended).size() <= 2 && brute_antisquares(extended).size() <= 3;
        REQUIRE(s.push(next) == fits);
        if (!fits) {
            REQUIRE(s.to_word() == before);
            REQUIRE(s.square_count() == sq);
            REQUIRE(s.antisquare_count() == an);
        }
        if (s.size() > 0 && (!fits || rng() % 4 == 0))
            s.pop();
    }
}

TEST_CASE("longest_word agrees with brute force on small budgets")
{
    for (std::size_t a = 0; a <= 2; ++a)
        for (std::size_t b = 0; b <= 3; ++b) {
            SearchOptions opts;
            opts.cutoff = 14;
            const SearchOutcome r = longest_word(SearchConstraint::squares_antisquares(a, b), 2, opts);
            const auto [len, word] = brute_longest(a, b, 14);
            REQUIRE(r.exhausted);
            CHECK(r.max_length_found == len);
            CHECK(r.witness.str() == word);
        }
}

TEST_CASE("small table rows")
{
    SearchOptions opts;
    opts.cutoff = 100;
    const SearchTable t = build_table(2, 13, opts);
    CHECK(table_rows(t) == "0: 1 2 3 3 3 3 3 3 3 3 3 3 3 3\n"
                           "1: 3 4 7 7 7 7 7 7 7 7 7 7 7 7\n"
                           "2: 5 6 11 11 11 11 12 12 12 13 15 18 18 18\n");
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t[a].size(); ++b) {
            const SearchOutcome& cell = t[a][b];
            REQUIRE(cell.witness.size() == cell.max_length_found);
            const FactorInventory inv = inventory(cell.witness);
            REQUIRE(inv.squares.size() <= a);
            REQUIRE(inv.antisquares.size() <= b);
            // Maximality: no one-letter extension stays within budget.
            for (Symbol x : {Symbol(0), Symbol(1)}) {
                const FactorInventory e = inventory(cell.witness + Word({x}, 2));
                REQUIRE((e.squares.size() > a || e.antisquares.size() > b));
                const FactorInventory f = inventory(Word({x}, 2) + cell.witness);
                REQUIRE((f.squares.size() > a || f.antisquares.size() > b));
            }
            if (a > 0)
                REQUIRE(cell.max_length_found >= t[a - 1][b].max_length_found);
            if (b > 0)
                REQUIRE(cell.max_length_found >= t[a][b - 1].max_length_found);
        }
}

TEST_CASE("table text forms")
{
    SearchOptions opts;
    opts.cutoff = 30;
    const SearchTable t = build_table(1, 1, opts);
    CHECK(table_tsv(t) == "a\\b\t0\t1\n0\t1\t2\n1\t3\t4\n");
    SearchTable inf = t;
    inf[1][1].exhausted = false;
    CHECK(table_tsv(inf) == "a\\b\t0\t1\n0\t1\t2\n1\t3\tinf\n");
}

TEST_CASE("cutoff reached on unavoidable cells")
{
    SearchOptions opts;
    opts.cutoff = 60;
    for (auto [a, b] : {std::pair{9, 2}, std::pair{3, 13}, std::pair{4, 9}, std::pair{5, 5},
                        std::pair{7, 3}}) {
        const SearchOutcome r = longest_word(SearchConstraint::squares_antisquares(a, b), 2, opts);
        CHECK_FALSE(r.exhausted);
        CHECK(r.max_length_found == 60);
        const FactorInventory inv = inventory(r.witness);
        CHECK(inv.squares.size() <= std::size_t(a));
        CHECK(inv.antisquares.size() <= std::size_t(b));
    }
}

TEST_CASE("results do not depend on the worker count")
{
    SearchOptions one;
    one.workers = 1;
    one.split_depth = 6;
    const SearchConstraint c = SearchConstraint::squares_antisquares(3, 5);
    const std::string base = longest_word(c, 2, one).json();
    for (unsigned w : {2u, 8u}) {
        SearchOptions many = one;
        many.workers = w;
        CHECK(longest_word(c, 2, many).json() == base);
    }
    SearchOptions cut = one;
    cut.cutoff = 40;
    const SearchConstraint inf = SearchConstraint::squares_antisquares(5, 5);
    const std::string cut_base = longest_word(inf, 2, cut).json();
    cut.workers = 8;
    CHECK(longest_word(inf, 2, cut).json() == cut_base);
}

TEST_CASE("symmetry does not change the answer")
{
    SearchOptions with;
    with.cutoff = 40;
    SearchOptions without = with;
    without.use_symmetry = false;
    for (auto [a, b] : {std::pair{2, 9}, std::pair{3, 5}, std::pair{1, 2}}) {
        const auto c = SearchConstraint::squares_antisquares(a, b);
        const SearchOutcome x = longest_word(c, 2, with);
        const SearchOutcome y = longest_word(c, 2, without);
        CHECK(x.max_length_found == y.max_length_found);
        CHECK(x.witness == y.witness);
    }
    SearchConstraint asym;
    asym.forbidden_factors = {Word::parse("000")};
    CHECK_FALSE(asym.complement_invariant());
    asym.forbidden_factors.push_back(Word::parse("111"));
    CHECK(asym.complement_invariant());
}

TEST_CASE("forbidden factors and exponent caps")
{
    SearchConstraint c;
    c.forbidden_factors = {Word::parse("00"), Word::parse("11")};
    SearchOptions opts;
    opts.cutoff = 20;
    CHECK(longest_word(c, 2, opts).max_length_found == 20);
    SearchConstraint sq;
    sq.exponent_cap = FreenessSpec{Exponent(2, 1), false, 1};
    const SearchOutcome r = longest_word(sq, 2, opts);
    CHECK(r.exhausted);
    CHECK(r.max_length_found == 3);
    CHECK(longest_word(sq, 3, opts).max_length_found == 20);
}

TEST_CASE("pseudosquare bans")
{
    SearchOptions opts;
    opts.cutoff = 60;
    // Restricted growth loses nothing against a fixed larger alphabet.
    SearchConstraint c;
    c.pseudosquare_bans = {PseudosquareBan{PseudosquareKind::permutation, 2}};
    const SearchOutcome four = longest_word(c, 4, opts);
    CHECK(four.exhausted);
    CHECK(four.max_length_found == 9);
    const SearchOutcome rg = longest_word_any_alphabet(PseudosquareKind::permutation, 2, false, opts);
    CHECK(rg.max_length_found == 9);
    CHECK_THROWS_AS(longest_word(c, 0, opts), std::invalid_argument);
    // The restricted-growth witness is its own canonical relabeling.
    int next = 0;
    for (Symbol s : rg.witness) {
        REQUIRE(int(s) <= next);
        next = std::max(next, int(s) + 1);
    }
}

TEST_CASE("constraints must say something")
{
    CHECK_THROWS_AS(longest_word(SearchConstraint{}, 2), std::invalid_argument);
    SearchOptions opts;
    opts.cutoff = 0;
    CHECK_THROWS_AS(longest_word(SearchConstraint::squares_antisquares(1, 1), 2, opts),
                    std::invalid_argument);
}

TEST_CASE("discovery")
{
    DiscoverOptions none;
    none.check_len = 8;
    std::size_t calls = 0;
    const DiscoverStats empty = discover_uniform_morphism(0, 0, 6, none, [&](const Morphism&) {
        ++calls;
        return true;
    });
    CHECK(empty.found == 0);
    CHECK(calls == 0);

    // With most of each image given, the search lands on the catalog morphism.
    const Morphism& h = catalog_lookup("h_5_5").morphism;
    DiscoverOptions opts;
    opts.check_len = 12;
    for (const Word& img : h.images())
        opts.image_prefixes.push_back(img.factor(0, 30));
    bool saw = false;
    const DiscoverStats stats = discover_uniform_morphism(5, 5, 36, opts, [&](const Morphism& g) {
        REQUIRE(morphism_within_budget(g, 5, 5, 12));
        saw = saw || g == h;
        return true;
    });
    CHECK(saw);
    CHECK(stats.found >= 1);

    for (const std::string& name : budget_morphism_names()) {
        const auto [a, b] = budget_of(name);
        CHECK_MESSAGE(morphism_within_budget(catalog_lookup(name).morphism, a, b, 8), name);
    }
    CHECK_FALSE(morphism_within_budget(h, 4, 5, 8));
}
