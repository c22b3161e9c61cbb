#include <doctest.h>

#include <stdexcept>

#include "psq/catalog.hpp"
#include "psq/morphism.hpp"
#include "test_util.hpp"

using namespace psq;

TEST_CASE("parse, print, apply")
{
    const Morphism h = Morphism::parse("# comment\n0 -> 01\n1 -> 10\n");
    CHECK(h.domain_size() == 2);
    CHECK(h.uniform_length() == 2u);
    CHECK(h.str() == "0 -> 01\n1 -> 10\n");
    CHECK(Morphism::parse(h.str()) == h);
    CHECK(apply(h, Word::parse("011")).str() == "011010");
    CHECK(apply(h, Word()).empty());
    CHECK_THROWS_AS(apply(h, Word::parse("012")), std::invalid_argument);
    CHECK_THROWS_AS(Morphism::parse("1 -> 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(Morphism::parse("0 => 1\n"), std::invalid_argument);
}

TEST_CASE("identity, codings, erasing")
{
    const Word w = Word::parse("0120", 3);
    CHECK(apply(Morphism::identity(3), w) == w);
    CHECK(apply(Morphism::coding({1, 1, 0}), w).str() == "1101");
    const Morphism erase({Word::parse("0"), Word()});
    CHECK_FALSE(erase.is_nonerasing());
    CHECK(erase.min_image_length() == 0);
    CHECK(apply(erase, Word::parse("0110")).str() == "00");
}

TEST_CASE("composition")
{
    const Morphism tm = Morphism::parse("0 -> 01\n1 -> 10\n");
    const Morphism tm2 = compose(tm, tm);
    CHECK(tm2.image(0).str() == "0110");
    for_all_words(2, 6, [&](const Word& w) { REQUIRE(apply(tm2, w) == apply(tm, apply(tm, w))); });
    CHECK_THROWS_AS(compose(tm, Morphism::identity(3)), std::invalid_argument);
}

TEST_CASE("h_3_13 factors through the 18-uniform morphism")
{
    const Morphism composed =
        compose(catalog_lookup("h_3_13_prime").morphism, catalog_lookup("m18").morphism);
    CHECK(composed == catalog_lookup("h_3_13").morphism);
}

TEST_CASE("fixed points")
{
    const Morphism tm = Morphism::parse("0 -> 01\n1 -> 10\n");
    CHECK(fixed_point_prefix(tm, 0, 16).str() == "0110100110010110");
    CHECK(fixed_point_prefix(tm, 0, 1).str() == "0");
    CHECK(fixed_point_prefix(tm, 1, 8).str() == "10010110");
    CHECK_THROWS_AS(fixed_point_prefix(Morphism::parse("0 -> 10\n1 -> 01\n"), 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_prefix(Morphism::parse("0 -> 0\n1 -> 1\n"), 0, 8), std::invalid_argument);
    const Morphism finite = Morphism::parse("0 -> 01\n1 -> \n");
    CHECK_THROWS_AS(fixed_point_prefix(finite, 0, 8), std::invalid_argument);
    const CatalogEntry& t4 = catalog_lookup("thm4");
    CHECK(apply(*t4.coding, fixed_point_prefix(t4.morphism, 0, 8)).str() ==
          apply(*t4.coding, Word::parse("01232451", 8)).str());
}

TEST_CASE("synchronization")
{
    for (const std::string& name : budget_morphism_names())
        CHECK_MESSAGE(synchronization_check(catalog_lookup(name).morphism), name);
    // 0 -> 0, 1 -> 00: h(1) occurs inside h(00).
    const Morphism bad = Morphism::parse("0 -> 0\n1 -> 00\n");
    const auto c = find_desynchronization(bad);
    REQUIRE(c.has_value());
    const Word image = apply(bad, c->domain_word);
    CHECK(is_factor(bad.image(c->letter), image.factor(c->position, image.size() - c->position)));
    CHECK(synchronization_span(catalog_lookup("h_7_3_prime").morphism) == 4);
}

TEST_CASE("catalog contents")
{
    CHECK(catalog_lookup("h_3_13").morphism.uniform_length() == 216u);
    CHECK(catalog_lookup("h_4_9").morphism.uniform_length() == 55u);
    CHECK(catalog_lookup("h_5_5").morphism.uniform_length() == 36u);
    CHECK(catalog_lookup("h_7_3").morphism.uniform_length() == 29u);
    CHECK(catalog_lookup("h_9_2").morphism.uniform_length() == 22u);
    CHECK(catalog_lookup("m18").morphism.uniform_length() == 18u);
    CHECK(catalog_lookup("m246").morphism.uniform_length() == 246u);
    const Morphism& p = catalog_lookup("h_3_13_prime").morphism;
    CHECK(p.image(0).size() == 16);
    CHECK(p.image(1).size() == 12);
    CHECK(p.image(2).size() == 8);
    CHECK(catalog_lookup("h_5_5").morphism.image(0).str() == "101000001011000010100001101011000001");
    CHECK(catalog_lookup("thm7").morphism.domain_size() == 6);
    CHECK_THROWS_AS(catalog_lookup("nope"), std::out_of_range);
}

TEST_CASE("catalog budgets agree with the claims")
{
    for (const std::string& name : budget_morphism_names()) {
        const CatalogEntry& e = catalog_lookup(name);
        const auto [a, b] = budget_of(name);
        CHECK_MESSAGE(e.claimed_squares.size() == a, name);
        CHECK_MESSAGE(e.claimed_antisquares.size() == b, name);
    }
    CHECK(budget_of("h_3_13_prime") == std::pair<std::size_t, std::size_t>{3, 13});
    CHECK(catalog_lookup("h_4_9").claimed_antisquares.contains(Word::parse("1110000011")));
    CHECK(catalog_lookup("h_3_13").claimed_antisquares.contains(Word::parse("10010110")));
    CHECK(catalog_lookup("h_9_2").claimed_squares.contains(Word::parse("00010001")));
}

TEST_CASE("catalog digests")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    for (const std::string& name : catalog_names())
        CHECK(Morphism::parse(catalog_source(name)) == catalog_lookup(name).morphism);
}
