#include "psq/verifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "psq/generator.hpp"
#include "psq/repetition.hpp"

namespace psq {

namespace {

nlohmann::ordered_json words_json(const WordSet& set)
{
    auto arr = nlohmann::ordered_json::array();
    for (const Word& w : set)
        arr.push_back(w.str());
    return arr;
}

nlohmann::ordered_json outcome_json(const SearchOutcome& o)
{
    nlohmann::ordered_json j;
    j["max_length_found"] = o.max_length_found;
    j["exhausted"] = o.exhausted;
    j["witness"] = o.witness.str();
    j["nodes_visited"] = o.nodes_visited;
    return j;
}

WordSet parse_set(std::initializer_list<const char*> items)
{
    WordSet out;
    for (const char* s : items)
        out.insert(Word::parse(s, 2));
    return out;
}

// Compares a computed factor set against a claimed one; every difference
// becomes a failure with the offending factor.
void compare_sets(VerificationReport& r, std::string_view check,
                  const std::map<Word, Word, ShortLex>& found, const WordSet& claimed)
{
    for (const auto& [factor, domain_word] : found)
        if (!claimed.contains(factor))
            r.fail(check, {{"unexpected", factor.str()}, {"domain_word", domain_word.str()}});
    for (const Word& factor : claimed)
        if (!found.contains(factor))
            r.fail(check, {{"missing", factor.str()}});
}

void compare_sets(VerificationReport& r, std::string_view check, const WordSet& found,
                  const WordSet& claimed)
{
    for (const Word& factor : found)
        if (!claimed.contains(factor))
            r.fail(check, {{"unexpected", factor.str()}});
    for (const Word& factor : claimed)
        if (!found.contains(factor))
            r.fail(check, {{"missing", factor.str()}});
}

} // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_proposition1(std::size_t a_max, const SearchOptions& options)
{
    VerificationReport r;
    r.claim_id = "prop1";
    r.parameters["a_max"] = a_max;
    r.parameters["cutoff"] = options.cutoff;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a <= a_max; ++a) {
        const SearchOutcome none =
            longest_word(SearchConstraint::squares_antisquares(a, 0), 2, options);
        const SearchOutcome one =
            longest_word(SearchConstraint::squares_antisquares(a, 1), 2, options);
        rows.push_back({{"a", a},
                        {"b0", none.max_length_found},
                        {"b1", one.max_length_found},
                        {"b0_witness", none.witness.str()},
                        {"b1_witness", one.witness.str()}});
        r.require(none.exhausted && none.max_length_found == 2 * a + 1, "column_b0",
                  {{"a", a}, {"found", outcome_json(none)}, {"expected", 2 * a + 1}});
        r.require(one.exhausted && one.max_length_found == 2 * a + 2, "column_b1",
                  {{"a", a}, {"found", outcome_json(one)}, {"expected", 2 * a + 2}});
    }
    r.evidence["rows"] = rows;
    return r;
}

// ---------------------------------------------------------------------------

VerificationReport verify_morphism_claim(std::string_view name)
{
    return verify_morphism_claim(catalog_lookup(name));
}

VerificationReport verify_morphism_claim(const CatalogEntry& entry)
{
    const Morphism& h = entry.morphism;
    if (h.domain_size() != 3 || h.target_alphabet() != 2)
        throw std::invalid_argument("verify_morphism_claim: need a ternary-to-binary morphism");
    if (entry.claimed_squares.empty() || entry.recurrent_witness.empty())
        throw std::invalid_argument("verify_morphism_claim: entry '" + entry.name +
                                    "' carries no square/antisquare claim");

    VerificationReport r;
    r.claim_id = "thm2:" + entry.name;

    const std::size_t l0 = h.image(0).size();
    const std::size_t l1 = h.image(1).size();
    const std::size_t l2 = h.image(2).size();
    r.require(l0 >= l1 && l1 >= l2, "image_ordering", {{"lengths", {l0, l1, l2}}});

    // Images of letters only occur aligned.
    const std::size_t span = synchronization_span(h);
    if (const auto bad = find_desynchronization(h, span))
        r.fail("synchronization", {{"domain_word", bad->domain_word.str()},
                                   {"letter", int(bad->letter)},
                                   {"position", bad->position}});

    // Bounded scans. Squares of order <= 2|h(0)|-2 are enumerated exactly;
    // longer squares reduce to a square in h(abc) whose order lies in
    // [|h(2)|/2+1, 3|h(0)|/2], inside the scanned range.
    const std::size_t square_order = 2 * l0 - 2;
    // f must occur in h(v) for every squarefree v of some length s; then any
    // window of length (s + 1) * max |h(a)| contains f.
    const Word& f = entry.recurrent_witness;
    std::size_t witness_span = 0;
    Word uncovered;
    for (std::size_t s = 1; s <= 3 && witness_span == 0; ++s) {
        uncovered = Word();
        squarefree_ternary(s, [&](std::span<const Symbol> v) {
            const Word d(std::vector<Symbol>(v.begin(), v.end()), 3);
            if (is_factor(f, apply(h, d)))
                return true;
            uncovered = d;
            return false;
        });
        if (uncovered.empty())
            witness_span = s;
    }
    if (witness_span == 0)
        r.fail("recurrent_witness", {{"witness", f.str()}, {"domain_word", uncovered.str()}});
    const std::size_t gap = (std::max<std::size_t>(witness_span, 1) + 1) * h.max_image_length();
    const std::size_t antisquare_order = gap + f.size();
    const std::size_t domain_len = std::max(covering_domain_length(h, 2 * square_order),
                                            covering_domain_length(h, 2 * antisquare_order));
    ImageScanOptions scan_options;
    scan_options.max_square_order = square_order;
    scan_options.max_antisquare_order = antisquare_order;
    scan_options.watched_factors = {complement(f)};
    const ImageScanResult scan =
        scan_images(h, {3, domain_len, squarefree_extension()}, scan_options);

    r.parameters["name"] = entry.name;
    r.parameters["image_lengths"] = {l0, l1, l2};
    r.parameters["synchronization_span"] = span;
    r.parameters["square_order_bound"] = square_order;
    r.parameters["recurrent_witness"] = f.str();
    r.parameters["witness_span"] = witness_span;
    r.parameters["gap_bound"] = gap;
    r.parameters["antisquare_order_bound"] = antisquare_order;
    r.parameters["domain_length"] = domain_len;

    compare_sets(r, "square_set", scan.squares, entry.claimed_squares);

    const std::size_t window_lo = l2 / 2 + 1;
    const std::size_t window_hi = 3 * l0 / 2;
    r.require(window_hi <= square_order, "long_square_window",
              {{"window", {window_lo, window_hi}}, {"scanned_up_to", square_order}});
    for (const Word& sq : entry.claimed_squares) {
        const std::size_t order = sq.size() / 2;
        r.require(order < window_lo || order > window_hi, "long_square_window",
                  {{"square", sq.str()}, {"window", {window_lo, window_hi}}});
    }

    // Every window of length gap contains f; an antisquare x x~ with
    // |x| >= gap would put complement(f) into the word.
    for (const auto& [factor, domain_word] : scan.watched)
        r.fail("complement_absent", {{"factor", factor.str()}, {"domain_word", domain_word.str()}});
    compare_sets(r, "antisquare_set", scan.antisquares, entry.claimed_antisquares);

    r.evidence["squares"] = words_json(scan.square_set());
    r.evidence["antisquares"] = words_json(scan.antisquare_set());
    r.evidence["domain_words_scanned"] = scan.domain_words;
    return r;
}

// ---------------------------------------------------------------------------

VerificationReport verify_corollaries(const SearchOptions& options)
{
    VerificationReport r;
    r.claim_id = "cor3";
    r.parameters["cutoff"] = options.cutoff;

    const Word w45 = Word::parse("000001000000010100000010000101000000010000101", 2);
    const FactorInventory inv45 = inventory(w45);
    r.evidence["word45"] = {{"word", w45.str()},
                            {"length", w45.size()},
                            {"squares", words_json(inv45.squares)},
                            {"antisquares", words_json(inv45.antisquares)},
                            {"combined", inv45.combined()}};
    r.require(w45.size() == 45 && inv45.combined() == 9, "word45_combined",
              {{"combined", inv45.combined()}});

    SearchConstraint nine;
    nine.max_combined = 9;
    const SearchOutcome s9 = longest_word(nine, 2, options);
    r.evidence["combined9_search"] = outcome_json(s9);
    r.require(s9.exhausted && s9.max_length_found == 45, "combined9_longest", outcome_json(s9));

    const Word w57 =
        Word::parse("010001010000100100100001010010010100001001001000010100010", 2);
    const FactorInventory inv57 = inventory(w57);
    const Exponent ce57 = critical_exponent(w57);
    r.evidence["word57"] = {{"word", w57.str()},
                            {"length", w57.size()},
                            {"squares", inv57.squares.size()},
                            {"antisquares", inv57.antisquares.size()},
                            {"combined", inv57.combined()},
                            {"critical_exponent", ce57.str()}};
    r.require(w57.size() == 57 && inv57.combined() <= 10, "word57_combined",
              {{"combined", inv57.combined()}});
    r.require(ce57 < Exponent(5, 1), "word57_exponent", {{"critical_exponent", ce57.str()}});

    // Two readings of the budget: squares and antisquares together, or
    // antisquares alone. The first is the one the length 57 refers to.
    const FreenessSpec below5{Exponent(5, 1), false, 1};
    SearchConstraint ten;
    ten.max_combined = 10;
    ten.exponent_cap = below5;
    const SearchOutcome s10 = longest_word(ten, 2, options);
    SearchConstraint ten_anti;
    ten_anti.max_antisquares = 10;
    ten_anti.exponent_cap = below5;
    const SearchOutcome s10a = longest_word(ten_anti, 2, options);
    r.evidence["combined10_exponent5_search"] = outcome_json(s10);
    r.evidence["antisquares10_exponent5_search"] = outcome_json(s10a);
    r.require(s10.exhausted && s10.max_length_found == 57, "combined10_exponent5_longest",
              outcome_json(s10));

    // Largest powers in images of squarefree words under h_5_5.
    const Morphism& h = catalog_lookup("h_5_5").morphism;
    const std::size_t factor_len = 2 * h.max_image_length();
    const std::size_t domain_len = covering_domain_length(h, factor_len);
    const std::vector<std::pair<const char*, Exponent>> expected = {
        {"0", Exponent(5, 1)}, {"1", Exponent(2, 1)}, {"01", Exponent(5, 2)}, {"10", Exponent(5, 2)}};
    std::vector<Exponent> best(expected.size(), Exponent(0, 1));
    squarefree_ternary(domain_len, [&](std::span<const Symbol> u) {
        const Word img = apply(h, Word(std::vector<Symbol>(u.begin(), u.end()), 3));
        for (std::size_t i = 0; i < expected.size(); ++i)
            best[i] = std::max(best[i], max_fractional_power(img, Word::parse(expected[i].first, 2)));
        return true;
    });
    r.parameters["power_domain_length"] = domain_len;
    nlohmann::ordered_json powers;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        powers[expected[i].first] = best[i].str();
        r.require(best[i] == expected[i].second, "h55_max_power",
                  {{"base", expected[i].first},
                   {"found", best[i].str()},
                   {"expected", expected[i].second.str()}});
    }
    r.evidence["h55_max_powers"] = powers;
    return r;
}

// ---------------------------------------------------------------------------

VerificationReport verify_automatic_word(std::string_view name, std::size_t prefix_len,
                                         const SearchOptions& options)
{
    if (name != "thm4" && name != "thm7")
        throw std::invalid_argument("verify_automatic_word: unknown word '" + std::string(name) +
                                    "'");
    if (prefix_len < 100)
        throw std::invalid_argument("verify_automatic_word: prefix length must be >= 100");
    const CatalogEntry& entry = catalog_lookup(name);
    const Word prefix = apply(*entry.coding, fixed_point_prefix(entry.morphism, 0, prefix_len));

    VerificationReport r;
    r.claim_id = std::string(name);
    r.parameters["prefix_len"] = prefix_len;

    const WordSet squares = distinct_squares(prefix);
    const WordSet antisquares = distinct_antisquares(prefix);
    r.evidence["squares"] = words_json(squares);
    r.evidence["antisquares"] = words_json(antisquares);

    if (name == "thm4") {
        compare_sets(r, "square_set", squares, parse_set({"00", "11", "0000", "0101", "1010"}));
        compare_sets(r, "antisquare_set", antisquares,
                     parse_set({"01", "10", "0011", "0110", "1001", "1100"}));
        return r;
    }

    for (const char* bad : {"0000", "1111"})
        r.require(!is_factor(Word::parse(bad, 2), prefix), "forbidden_power", {{"factor", bad}});
    for (const Word& sq : squares)
        r.require(sq.size() / 2 < 4, "square_order", {{"factor", sq.str()}});
    for (const Word& an : antisquares)
        r.require(an.size() / 2 < 4, "antisquare_order", {{"factor", an.str()}});

    // Threshold 3: 000, 111, and x x, x x~ with |x| >= 3.
    SearchConstraint c;
    c.forbidden_factors = {Word::parse("000", 2), Word::parse("111", 2)};
    PseudosquareBan ban;
    ban.kind = PseudosquareKind::permutation;
    ban.min_len = 3;
    c.pseudosquare_bans.push_back(ban);
    const SearchOutcome s = longest_word(c, 2, options);
    r.parameters["threshold3_cutoff"] = options.cutoff;
    r.evidence["threshold3_search"] = outcome_json(s);
    r.require(s.exhausted, "threshold3_finite", outcome_json(s));
    return r;
}

// ---------------------------------------------------------------------------

VerificationReport verify_theorem9(Theorem9Mode mode, const SearchOptions& options)
{
    VerificationReport r;
    SearchConstraint c;
    if (mode == Theorem9Mode::direct) {
        r.claim_id = "thm9:direct";
        PseudosquareBan ban;
        ban.kind = PseudosquareKind::morphic;
        ban.min_len = 4;
        c.pseudosquare_bans.push_back(ban);
    } else {
        r.claim_id = "thm9:reduction";
        c.forbidden_factors = {Word::parse("000", 2), Word::parse("111", 2),
                               Word::parse("0100", 2)};
        c.exponent_cap = FreenessSpec{Exponent(2, 1), false, 4};
    }
    r.parameters["constraint"] = nlohmann::ordered_json::parse(c.json());
    r.parameters["cutoff"] = options.cutoff;
    const SearchOutcome s = longest_word(c, 2, options);
    r.evidence["search"] = outcome_json(s);
    r.require(s.exhausted, "finite", outcome_json(s));
    return r;
}

// ---------------------------------------------------------------------------

VerificationReport verify_claim(std::string_view claim, const SearchOptions& options)
{
    auto starts = [&](std::string_view p) { return claim.substr(0, p.size()) == p; };
    if (claim == "prop1")
        return verify_proposition1(10, options);
    if (claim == "cor3")
        return verify_corollaries(options);
    if (claim == "thm4" || claim == "thm7")
        return verify_automatic_word(claim, 20000, options);
    if (claim == "thm9:direct")
        return verify_theorem9(Theorem9Mode::direct, options);
    if (claim == "thm9:reduction")
        return verify_theorem9(Theorem9Mode::reduction, options);
    if (claim == "thm2:all") {
        VerificationReport r;
        r.claim_id = "thm2:all";
        for (const std::string& name : budget_morphism_names())
            r.absorb(name, verify_morphism_claim(name));
        return r;
    }
    if (starts("thm2:")) {
        const std::string name(claim.substr(5));
        const auto names = budget_morphism_names();
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw std::invalid_argument("unknown morphism claim '" + name + "'");
        return verify_morphism_claim(name);
    }
    if (starts("thm10:"))
        return verify_theorem10(parse_theorem10_stage(claim.substr(6)), options);
    throw std::invalid_argument("unknown claim '" + std::string(claim) + "'");
}

} // namespace psq
