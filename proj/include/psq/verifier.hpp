// verifier.hpp -- re-derivation of the computer-checked claims about
// squares, antisquares and pseudosquares. Each check orchestrates the word,
// morphism, generator, pseudosquare and search primitives and returns a
// report carrying its parameters and evidence.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "psq/catalog.hpp"
#include "psq/search.hpp"

namespace psq {

struct VerificationReport
{
    std::string claim_id;
    bool passed = true;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json evidence = nlohmann::ordered_json::object();

    /// Marks the report failed and appends {"check": ..., "counterexample": ...}
    /// to evidence["failures"].
    void fail(std::string_view check, nlohmann::ordered_json counterexample);

    /// Records a sub-check: on failure, `counterexample` goes into the report.
    void require(bool ok, std::string_view check, nlohmann::ordered_json counterexample = {});

    /// Folds another report in under evidence[key].
    void absorb(const std::string& key, const VerificationReport& sub);

    std::string json(int indent = 2) const;
};

/// For every a <= a_max: the longest binary word with at most a squares and
/// no antisquare has length 2a+1, with at most one antisquare 2a+2.
VerificationReport verify_proposition1(std::size_t a_max, const SearchOptions& options = {});

/// The certificate for a budget morphism: letter images ordered by length,
/// synchronization, the bounded square scan with the window argument for
/// long squares, and the recurrent-factor argument for long antisquares.
VerificationReport verify_morphism_claim(std::string_view name);
VerificationReport verify_morphism_claim(const CatalogEntry& entry);

/// The length-45 and length-57 words, the combined-budget searches and the
/// largest powers in images under h_5_5.
VerificationReport verify_corollaries(const SearchOptions& options = {});

/// Bounded check of a coded fixed point ("thm4" or "thm7").
VerificationReport verify_automatic_word(std::string_view name, std::size_t prefix_len = 20000,
                                         const SearchOptions& options = {});

enum class Theorem9Mode
{
    direct,
    reduction,
};

/// Binary words avoiding x h(x) for |x| >= 4 are finite, either directly or
/// via avoiding 000, 111, 0100 and squares of period >= 4.
VerificationReport verify_theorem9(Theorem9Mode mode, const SearchOptions& options = {});

enum class Theorem10Stage
{
    props,
    ochem44,
    antisquare_scan,
    morphic_scan,
    all,
};

Theorem10Stage parse_theorem10_stage(std::string_view text);

/// The image of any (7/4+)-free ternary word under m246 avoids x h(x) for
/// |x| >= 5.
VerificationReport verify_theorem10(Theorem10Stage stage, const SearchOptions& options = {});

/// Dispatches a claim identifier: "prop1", "thm2:<name>", "thm2:all",
/// "cor3", "thm4", "thm7", "thm9:direct", "thm9:reduction", "thm10:<stage>".
/// Throws `std::invalid_argument` for unknown identifiers.
VerificationReport verify_claim(std::string_view claim, const SearchOptions& options = {});

} // namespace psq
