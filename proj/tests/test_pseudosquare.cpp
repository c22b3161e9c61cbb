#include <doctest.h>

#include <random>
#include <stdexcept>

#include "psq/pseudosquare.hpp"
#include "test_util.hpp"

using namespace psq;

namespace {

// Every map of {0..k-1} into itself, optionally only the bijections.
std::vector<Morphism> all_codings(int k, bool bijective)
{
    std::vector<Morphism> out;
    std::vector<Symbol> f(k, 0);
    for (;;) {
        std::vector<bool> hit(k, false);
        bool inj = true;
        for (Symbol b : f) {
            inj = inj && !hit[b];
            hit[b] = true;
        }
        if (inj || !bijective)
            out.push_back(Morphism::coding(f, k));
        int i = k;
        while (i > 0 && f[i - 1] == k - 1)
            f[--i] = 0;
        if (i == 0)
            break;
        ++f[i - 1];
    }
    return out;
}

struct BruteHit
{
    std::size_t pos;
    std::size_t len; // |x|
};

std::optional<BruteHit> brute_coding_hit(const Word& w, std::size_t min_len, bool bijective,
                                         bool bidirectional)
{
    const auto maps = all_codings(w.alphabet_size(), bijective);
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t len = min_len; pos + 2 * len <= w.size(); ++len) {
            const Word a = w.factor(pos, len);
            const Word b = w.factor(pos + len, len);
            for (const Morphism& p : maps)
                if (apply(p, a) == b || (bidirectional && apply(p, b) == a))
                    return BruteHit{pos, len};
        }
    return std::nullopt;
}

std::optional<BruteHit> brute_morphic_hit(const Word& w, std::size_t min_len, std::size_t max_len)
{
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t len = min_len; len <= max_len && pos + len <= w.size(); ++len)
            for (std::size_t ylen = len; pos + len + ylen <= w.size(); ++ylen)
                if (brute_morphism_match(w.factor(pos, len), w.factor(pos + len, ylen), SIZE_MAX, true))
                    return BruteHit{pos, len};
    return std::nullopt;
}

} // namespace

TEST_CASE("morphism_match agrees with enumeration of image lengths")
{
    for_all_words(2, 4, [](const Word& x) {
        for_all_words(2, 8, [&](const Word& y) {
            const auto got = morphism_match(x, y);
            const auto want = brute_morphism_match(x, y, SIZE_MAX, true);
            REQUIRE(got.has_value() == want.has_value());
            if (got) {
                REQUIRE(image_strings(*got) == *want);
                REQUIRE(apply(*got, x) == y);
            }
        });
    });
}

TEST_CASE("morphism_match with budgets and erasing")
{
    for_all_words(2, 3, [](const Word& x) {
        for_all_words(2, 6, [&](const Word& y) {
            for (std::size_t budget : {2, 3, 5}) {
                const auto got = morphism_match(x, y, {budget, true});
                const auto want = brute_morphism_match(x, y, budget, true);
                REQUIRE(got.has_value() == want.has_value());
                if (got)
                    REQUIRE(image_strings(*got) == *want);
            }
            const auto got = morphism_match(x, y, {SIZE_MAX, false});
            const auto want = brute_morphism_match(x, y, SIZE_MAX, false);
            REQUIRE(got.has_value() == want.has_value());
            if (got)
                REQUIRE(image_strings(*got) == *want);
        });
    });
    CHECK(morphism_match(Word::parse("01"), Word()) == std::nullopt);
    CHECK(morphism_match(Word::parse("01"), Word(), {SIZE_MAX, false}).has_value());
    CHECK_THROWS_AS(morphism_match(Word(), Word::parse("0")), std::invalid_argument);
}

TEST_CASE("morphism_match on a larger alphabet")
{
    const auto h = morphism_match(Word::parse("012", 3), Word::parse("0110100"));
    REQUIRE(h.has_value());
    CHECK(apply(*h, Word::parse("012", 3)).str() == "0110100");
    CHECK(h->image(0).str() == "0");
    CHECK(h->image(1).str() == "1");
    CHECK(h->image(2).str() == "10100");
    CHECK_FALSE(morphism_match(Word::parse("0101"), Word::parse("0110")).has_value());
}

TEST_CASE("binary fast path agrees with morphism_match")
{
    for_all_words(2, 4, [](const Word& x) {
        for_all_words(2, 7, [&](const Word& y) {
            for (std::size_t budget : {std::size_t(2), std::size_t(4), std::size_t(6), SIZE_MAX})
                REQUIRE(binary_morphism_matches(x.view(), y.view(), {budget, true}) ==
                        morphism_match(x, y, {budget, true}).has_value());
        });
    });
}

TEST_CASE("coding finders agree with brute force")
{
    for (int k : {2, 3}) {
        const std::size_t n = k == 2 ? 10 : 7;
        for_all_words(k, n, [&](const Word& w0) {
            const Word w = w0.with_alphabet(k);
            for (std::size_t min_len : {1, 2, 3}) {
                const auto perm = find_permutation_pseudosquare(w, min_len);
                const auto bp = brute_coding_hit(w, min_len, true, false);
                REQUIRE(perm.has_value() == bp.has_value());
                if (perm) {
                    REQUIRE(perm->position == bp->pos);
                    REQUIRE(perm->x.size() == bp->len);
                    REQUIRE(perm->factor() == w.factor(perm->position, perm->length()));
                }
                for (bool bidi : {false, true}) {
                    const auto tr = find_transformation_pseudosquare(w, min_len, bidi);
                    const auto bt = brute_coding_hit(w, min_len, false, bidi);
                    REQUIRE(tr.has_value() == bt.has_value());
                    if (tr) {
                        REQUIRE(tr->position == bt->pos);
                        REQUIRE(tr->x.size() == bt->len);
                        REQUIRE(tr->factor() == w.factor(tr->position, tr->length()));
                    }
                }
            }
        });
    }
}

TEST_CASE("reverse orientation")
{
    // 0012: no map sends 00 to 12, but 12 -> 00 is a transformation.
    const Word w = Word::parse("0012", 3);
    CHECK_FALSE(find_transformation_pseudosquare(w, 2, false).has_value());
    const auto hit = find_transformation_pseudosquare(w, 2, true);
    REQUIRE(hit.has_value());
    CHECK(hit->orientation == Orientation::image_then_x);
    CHECK(hit->x.str() == "12");
    CHECK(hit->factor() == w);
}

TEST_CASE("morphic finder agrees with brute force")
{
    for_all_words(2, 9, [](const Word& w) {
        for (std::size_t min_len : {2, 3}) {
            const auto got = find_morphic_pseudosquare(w, min_len, 4);
            const auto want = brute_morphic_hit(w, min_len, 4);
            REQUIRE(got.has_value() == want.has_value());
            if (got) {
                REQUIRE(got->position == want->pos);
                REQUIRE(got->x.size() == want->len);
                REQUIRE(got->factor() == w.factor(got->position, got->length()));
            }
        }
    });
    CHECK_THROWS_AS(find_morphic_pseudosquare(Word::parse("01"), 3, 2), std::invalid_argument);
}

TEST_CASE("suffix tests find exactly the words containing a hit")
{
    std::mt19937 rng(13);
    for (int iter = 0; iter < 400; ++iter) {
        const int k = 2 + iter % 2;
        const Word w = random_word(rng, k, 1 + rng() % 14);
        for (std::size_t min_len : {2, 3}) {
            bool perm = false, trans = false, bidi = false, morph = false;
            for (std::size_t n = 1; n <= w.size(); ++n) {
                const auto pre = w.view().first(n);
                perm = perm || coding_pseudosquare_at_end(pre, min_len, true, false);
                trans = trans || coding_pseudosquare_at_end(pre, min_len, false, false);
                bidi = bidi || coding_pseudosquare_at_end(pre, min_len, false, true);
                if (k == 2)
                    morph = morph || morphic_pseudosquare_at_end(pre, min_len, 4, {});
            }
            REQUIRE(perm == find_permutation_pseudosquare(w, min_len).has_value());
            REQUIRE(trans == find_transformation_pseudosquare(w, min_len, false).has_value());
            REQUIRE(bidi == find_transformation_pseudosquare(w, min_len, true).has_value());
            if (k == 2)
                REQUIRE(morph == find_morphic_pseudosquare(w, min_len, 4).has_value());
        }
    }
}

TEST_CASE("kind names")
{
    CHECK(parse_kind("perm") == PseudosquareKind::permutation);
    CHECK(parse_kind("transformation") == PseudosquareKind::transformation);
    CHECK(to_string(PseudosquareKind::morphic) == "morphic");
    CHECK_THROWS_AS(parse_kind("square"), std::invalid_argument);
}

TEST_CASE("small hits")
{
    auto p = find_permutation_pseudosquare(Word::parse("0101"), 2);
    REQUIRE(p.has_value());
    CHECK(p->x.str() == "01");
    CHECK(p->witness == Morphism::identity(2));
    p = find_permutation_pseudosquare(Word::parse("0110"), 2);
    REQUIRE(p.has_value());
    CHECK(p->x.str() == "01");
    CHECK(p->witness == Morphism::coding({1, 0}, 2));
    p = find_permutation_pseudosquare(Word::parse("012", 3), 1);
    REQUIRE(p.has_value());
    CHECK(p->position == 0);
    CHECK(p->witness.image(0).str() == "1");

    auto t = find_transformation_pseudosquare(Word::parse("000000"), 3, false);
    REQUIRE(t.has_value());
    CHECK(t->x.str() == "000");
    t = find_transformation_pseudosquare(Word::parse("010111"), 3, false);
    REQUIRE(t.has_value());
    CHECK(t->x.str() == "010");
    CHECK(apply(t->witness, t->x).str() == "111");

    CHECK(morphism_match(Word::parse("00"), Word::parse("0101"))->image(0).str() == "01");
    CHECK_FALSE(morphism_match(Word::parse("010"), Word::parse("011")).has_value());
    const auto c = morphism_match(Word::parse("01"), Word::parse("11"));
    REQUIRE(c.has_value());
    CHECK(c->image(0).str() == "1");
    CHECK(c->image(1).str() == "1");

    const auto m = find_morphic_pseudosquare(Word::parse("000100"), 1, 3);
    REQUIRE(m.has_value());
    CHECK(m->position == 0);
    CHECK(m->x.str() == "0");
    CHECK(m->witness.image(0).str() == "0");
    CHECK_FALSE(find_morphic_pseudosquare(Word::parse("0110100"), 4, 6).has_value());
}
