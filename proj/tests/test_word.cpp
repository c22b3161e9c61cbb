#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "psq/word.hpp"
#include "test_util.hpp"

using namespace psq;

TEST_CASE("parse and print")
{
    CHECK(Word::parse("0a1z", 36).str() == "0a1z");
    CHECK(Word::parse("0102").alphabet_size() == 3);
    CHECK(Word::parse("000").alphabet_size() == 2);
    CHECK(Word::parse("").empty());
    CHECK_THROWS_AS(Word::parse("01x", 3), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("0-1"), std::invalid_argument);
    CHECK_THROWS_AS(Word({0, 3}, 3), std::invalid_argument);
}

TEST_CASE("complement and reverse")
{
    CHECK(complement(Word::parse("0011")).str() == "1100");
    CHECK(reverse(Word::parse("0012", 3)).str() == "2100");
    CHECK_THROWS_AS(complement(Word::parse("012")), std::invalid_argument);
}

TEST_CASE("shortlex order")
{
    WordSet s{Word::parse("10"), Word::parse("0"), Word::parse("01"), Word::parse("1")};
    std::vector<std::string> order;
    for (const Word& w : s)
        order.push_back(w.str());
    CHECK(order == std::vector<std::string>{"0", "1", "01", "10"});
}

TEST_CASE("factor occurrences")
{
    const Word w = Word::parse("0101010");
    CHECK(occurrences(Word::parse("010"), w) == std::vector<std::size_t>{0, 2, 4});
    CHECK(is_factor(Word::parse("1010"), w));
    CHECK_FALSE(is_factor(Word::parse("11"), w));
}

TEST_CASE("count 0101")
{
    const FactorInventory inv = inventory(Word::parse("0101"));
    CHECK(inv.squares == WordSet{Word::parse("0101")});
    CHECK(inv.antisquares == WordSet{Word::parse("01"), Word::parse("10")});
    CHECK(inv.combined() == 3);
}

TEST_CASE("distinct squares and antisquares agree with brute force on all short binary words")
{
    for_all_words(2, 12, [](const Word& w) {
        REQUIRE(distinct_squares(w) == brute_squares(w));
        REQUIRE(distinct_antisquares(w) == brute_antisquares(w));
    });
}

TEST_CASE("distinct squares on ternary words and order bound")
{
    for_all_words(3, 7, [](const Word& w) {
        REQUIRE(distinct_squares(w) == brute_squares(w));
        WordSet bounded;
        for (const Word& s : brute_squares(w))
            if (s.size() <= 4)
                bounded.insert(s);
        REQUIRE(distinct_squares(w, 2) == bounded);
    });
}

TEST_CASE("squarefreeness agrees with the square set")
{
    for_all_words(3, 8, [](const Word& w) { REQUIRE(is_squarefree(w) == brute_squares(w).empty()); });
}

TEST_CASE("inventory commutes with reversal and complement")
{
    std::mt19937 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        const Word w = random_word(rng, 2, 1 + rng() % 60);
        const FactorInventory inv = inventory(w);
        WordSet rev_sq, comp_sq, rev_an, comp_an;
        for (const Word& s : inv.squares) {
            rev_sq.insert(reverse(s));
            comp_sq.insert(complement(s));
        }
        for (const Word& s : inv.antisquares) {
            rev_an.insert(reverse(s));
            comp_an.insert(complement(s));
        }
        REQUIRE(distinct_squares(reverse(w)) == rev_sq);
        REQUIRE(distinct_squares(complement(w)) == comp_sq);
        REQUIRE(distinct_antisquares(reverse(w)) == rev_an);
        REQUIRE(distinct_antisquares(complement(w)) == comp_an);
    }
}

TEST_CASE("squares of a word are squares of every extension")
{
    std::mt19937 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const Word w = random_word(rng, 2, 1 + rng() % 40);
        const Word longer = w + random_word(rng, 2, 1 + rng() % 10);
        const WordSet a = distinct_squares(w);
        const WordSet b = distinct_squares(longer);
        for (const Word& s : a)
            REQUIRE(b.contains(s));
    }
}

TEST_CASE("inventory json")
{
    CHECK(inventory_json(inventory(Word::parse("0101"))) ==
          R"({"squares":["0101"],"antisquares":["01","10"]})");
}

TEST_CASE("word lines")
{
    const auto words = parse_word_lines("  01\n\n0011 \n");
    REQUIRE(words.size() == 2);
    CHECK(words[1].str() == "0011");
}
