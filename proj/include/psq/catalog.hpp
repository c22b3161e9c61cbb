// catalog.hpp -- the named morphisms shipped with the library.
//
// Entries:
//   h_3_13, h_3_13_prime, h_4_9, h_5_5, h_7_3, h_7_3_prime, h_9_2
//       ternary -> binary morphisms whose images of squarefree words have a
//       bounded number of distinct squares and antisquares;
//   m18   the 18-uniform ternary morphism with h_3_13 = h_3_13_prime o m18;
//   thm4  8-letter morphism (coding n -> n mod 2) whose coded fixed point
//         avoids xx and x~x for |x| >= 3;
//   thm7  6-letter morphism (coding n -> floor(n/3)) whose coded fixed point
//         avoids 0000, 1111, xx and x~x for |x| >= 4;
//   m246  the 246-uniform ternary morphism used against x h(x).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psq/morphism.hpp"
#include "psq/word.hpp"

namespace psq {

struct CatalogEntry
{
    std::string name;
    Morphism morphism;
    std::optional<Morphism> coding;
    WordSet claimed_squares;     ///< empty for entries without a square claim
    WordSet claimed_antisquares;
    Word recurrent_witness;      ///< factor f with complement(f) absent; empty if unused
};

/// Throws `std::out_of_range` for unknown names and `std::runtime_error` if
/// the embedded data no longer matches its digest.
const CatalogEntry& catalog_lookup(std::string_view name);

/// All entry names, in catalog order.
std::vector<std::string> catalog_names();

/// Names of the seven square/antisquare-budget morphisms.
std::vector<std::string> budget_morphism_names();

/// The (a, b) budget a budget morphism is named after ("h_4_9" -> {4, 9}).
std::pair<std::size_t, std::size_t> budget_of(std::string_view name);

/// 64-bit FNV-1a, used for the catalog digests.
std::uint64_t fnv1a64(std::string_view data);

/// Raw text of a catalog file as embedded at build time.
std::string_view catalog_source(std::string_view name);

} // namespace psq
