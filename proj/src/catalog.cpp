#include "psq/catalog.hpp"

#include <map>
#include <stdexcept>

namespace psq {

namespace {

struct RawEntry
{
    const char* name;
    const char* text;
};

constexpr RawEntry kRaw[] = {
#include "catalog_data.inc"
};

// Digests of data/catalog/*.morph. A mismatch means an image string was
// edited; every downstream check depends on these being exact.
constexpr std::pair<const char*, std::uint64_t> kDigests[] = {
    {"h_3_13", 0xc8ebdb0ab1bd580bULL},
    {"h_3_13_prime", 0x93f46747533edff5ULL},
    {"h_4_9", 0x3a182c2a0eed6816ULL},
    {"h_5_5", 0x5caea24f5f289f47ULL},
    {"h_7_3", 0xd7f1272cc507b9e8ULL},
    {"h_7_3_prime", 0x3317a262e95285beULL},
    {"h_9_2", 0x2608db121d6e57dfULL},
    {"m18", 0x951e285552fbe1a1ULL},
    {"thm4", 0x3ad0a1fb2af18b95ULL},
    {"thm4_coding", 0x9f7949797917fa05ULL},
    {"thm7", 0x0124b05017569dfdULL},
    {"thm7_coding", 0xd19e078629b3468bULL},
    {"m246", 0x9bd226dabf767f2eULL},
};

struct Claim
{
    const char* name;
    std::vector<const char*> squares;
    std::vector<const char*> antisquares;
    const char* witness;
};

const std::vector<Claim>& claims()
{
    static const std::vector<Claim> table = {
        {"h_3_13",
         {"00", "11", "0101"},
         {"01", "10", "0011", "0110", "1001", "1100", "000111", "001110", "011100", "100011",
          "110001", "111000", "10010110"},
         "0101"},
        {"h_3_13_prime",
         {"00", "11", "0101"},
         {"01", "10", "0011", "0110", "1001", "1100", "000111", "001110", "011100", "100011",
          "110001", "111000", "10010110"},
         "0101"},
        {"h_4_9",
         {"00", "11", "0000", "0101"},
         {"01", "10", "0011", "0110", "1100", "011100", "110001", "111000", "1110000011"},
         "0000"},
        {"h_5_5",
         {"00", "11", "0000", "0101", "1010"},
         {"01", "10", "0011", "0110", "1100"},
         "0000"},
        {"h_7_3",
         {"00", "0000", "0101", "1010", "001001", "010010", "100100"},
         {"01", "10", "1001"},
         "0000"},
        {"h_7_3_prime",
         {"00", "0000", "0101", "1010", "001001", "010010", "100100"},
         {"01", "10", "1001"},
         "0000"},
        {"h_9_2",
         {"00", "0000", "0101", "1010", "000000", "00010001", "00100010", "01000100", "10001000"},
         {"01", "10"},
         "0000"},
    };
    return table;
}

WordSet word_set(const std::vector<const char*>& items)
{
    WordSet out;
    for (const char* s : items)
        out.insert(Word::parse(s, 2));
    return out;
}

std::map<std::string, CatalogEntry, std::less<>> build()
{
    std::map<std::string, Morphism, std::less<>> morphisms;
    for (const RawEntry& raw : kRaw) {
        const std::string_view text(raw.text);
        bool checked = false;
        for (const auto& [name, digest] : kDigests) {
            if (std::string_view(name) == raw.name) {
                if (fnv1a64(text) != digest)
                    throw std::runtime_error(std::string("catalog entry '") + raw.name +
                                             "' does not match its digest");
                checked = true;
            }
        }
        if (!checked)
            throw std::runtime_error(std::string("catalog entry '") + raw.name + "' has no digest");
        morphisms.emplace(raw.name, Morphism::parse(text));
    }

    std::map<std::string, CatalogEntry, std::less<>> entries;
    for (const auto& [name, h] : morphisms) {
        if (name.ends_with("_coding"))
            continue;
        CatalogEntry e{name, h, std::nullopt, {}, {}, {}};
        if (auto it = morphisms.find(name + "_coding"); it != morphisms.end())
            e.coding = it->second;
        for (const Claim& c : claims()) {
            if (name == c.name) {
                e.claimed_squares = word_set(c.squares);
                e.claimed_antisquares = word_set(c.antisquares);
                e.recurrent_witness = Word::parse(c.witness, 2);
            }
        }
        entries.emplace(name, std::move(e));
    }
    return entries;
}

const std::map<std::string, CatalogEntry, std::less<>>& entries()
{
    static const auto table = build();
    return table;
}

} // namespace

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const CatalogEntry& catalog_lookup(std::string_view name)
{
    const auto& table = entries();
    const auto it = table.find(name);
    if (it == table.end())
        throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (const RawEntry& raw : kRaw)
        if (!std::string_view(raw.name).ends_with("_coding"))
            out.emplace_back(raw.name);
    return out;
}

std::vector<std::string> budget_morphism_names()
{
    std::vector<std::string> out;
    for (const Claim& c : claims())
        out.emplace_back(c.name);
    return out;
}

std::pair<std::size_t, std::size_t> budget_of(std::string_view name)
{
    // h_<a>_<b>[_prime]
    if (!name.starts_with("h_"))
        throw std::out_of_range("no budget for '" + std::string(name) + "'");
    std::string_view rest = name.substr(2);
    const auto sep = rest.find('_');
    if (sep == std::string_view::npos)
        throw std::out_of_range("no budget for '" + std::string(name) + "'");
    std::string_view b = rest.substr(sep + 1);
    if (const auto tail = b.find('_'); tail != std::string_view::npos)
        b = b.substr(0, tail);
    return {std::stoul(std::string(rest.substr(0, sep))), std::stoul(std::string(b))};
}

std::string_view catalog_source(std::string_view name)
{
    for (const RawEntry& raw : kRaw)
        if (name == raw.name)
            return raw.text;
    throw std::out_of_range("unknown catalog file '" + std::string(name) + "'");
}

} // namespace psq
