// psq -- command-line front end for the squares/antisquares/pseudosquares
// library. Results go to stdout, progress to stderr.
//
// Exit status: 0 success (or verification passed), 1 verification failed,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psq/catalog.hpp"
#include "psq/generator.hpp"
#include "psq/morphism.hpp"
#include "psq/parallel.hpp"
#include "psq/pseudosquare.hpp"
#include "psq/repetition.hpp"
#include "psq/search.hpp"
#include "psq/verifier.hpp"
#include "psq/word.hpp"

using psq::Word;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

psq::Morphism load_morphism(const std::string& file, const std::string& catalog)
{
    if (!file.empty() && !catalog.empty())
        throw UsageError("give either --morphism or --catalog, not both");
    if (!file.empty())
        return psq::Morphism::parse(read_file(file));
    if (!catalog.empty())
        return psq::catalog_lookup(catalog).morphism;
    throw UsageError("a morphism is required (--morphism FILE or --catalog NAME)");
}

json words_json(const psq::WordSet& set)
{
    auto arr = json::array();
    for (const Word& w : set)
        arr.push_back(w.str());
    return arr;
}

void print_words(const char* label, const psq::WordSet& set)
{
    std::cout << label << ": " << set.size();
    for (const Word& w : set)
        std::cout << ' ' << w.str();
    std::cout << '\n';
}

json outcome_json(const psq::SearchOutcome& o)
{
    return json::parse(o.json());
}

void print_outcome(const psq::SearchOutcome& o)
{
    if (o.exhausted)
        std::cout << "longest: " << o.max_length_found << '\n';
    else
        std::cout << "longest: cutoff reached (" << o.max_length_found << ")\n";
    std::cout << "witness: " << o.witness.str() << '\n';
    std::cout << "nodes: " << o.nodes_visited << '\n';
}

struct Common
{
    bool json_out = false;
    unsigned workers = 0;
    std::size_t cutoff = 500;
    bool progress = false;

    psq::SearchOptions search() const
    {
        psq::SearchOptions o;
        o.cutoff = cutoff;
        o.workers = workers ? workers : psq::default_workers();
        if (progress)
            o.progress = [](std::string_view msg) { std::cerr << msg << '\n'; };
        return o;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"squares, antisquares and pseudosquares in words"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json_out, "JSON output");
    app.add_option("--workers", common.workers, "search threads (default: PSQ_WORKERS or 1)");
    app.add_flag("--progress", common.progress, "progress messages on stderr");

    // count
    std::string count_word;
    auto* count = app.add_subcommand("count", "distinct squares and antisquares of a word");
    count->add_option("word", count_word)->required();

    // exponent
    std::string exp_word, exp_free;
    auto* exponent = app.add_subcommand("exponent", "critical exponent of a word");
    exponent->add_option("word", exp_word)->required();
    exponent->add_option("--free", exp_free, "also test (e,n)-freeness, e.g. 7/4+ or 11/6+,4");

    // apply
    std::string apply_word, morph_file, morph_catalog;
    auto* applyc = app.add_subcommand("apply", "image of a word under a morphism");
    applyc->add_option("word", apply_word)->required();
    applyc->add_option("--morphism", morph_file, "morphism file (lines 'i -> image')");
    applyc->add_option("--catalog", morph_catalog, "catalog entry name");

    // fixpoint
    std::size_t fix_len = 100;
    int fix_seed = 0;
    bool fix_coding = false;
    auto* fixpoint = app.add_subcommand("fixpoint", "prefix of a fixed point");
    fixpoint->add_option("--morphism", morph_file);
    fixpoint->add_option("--catalog", morph_catalog);
    fixpoint->add_option("--length", fix_len)->check(CLI::PositiveNumber);
    fixpoint->add_option("--seed", fix_seed);
    fixpoint->add_flag("--coding", fix_coding, "apply the catalog entry's coding afterwards");

    // enumerate
    int enum_k = 3;
    std::size_t enum_n = 5;
    std::string enum_filter = "squarefree";
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "words of a given length in a family");
    enumerate->add_option("--alphabet", enum_k)->check(CLI::Range(1, psq::kMaxAlphabet));
    enumerate->add_option("--length", enum_n);
    enumerate->add_option("--filter", enum_filter, "all | squarefree | dejean | FREENESS-SPEC");
    enumerate->add_flag("--count-only", count_only);

    // longest
    std::optional<std::size_t> lw_sq, lw_an, lw_comb;
    std::vector<std::string> lw_forbid, lw_ban;
    std::string lw_exp;
    int lw_k = 2;
    auto* longest = app.add_subcommand("longest", "longest word under avoidance constraints");
    longest->add_option("--squares", lw_sq);
    longest->add_option("--antisquares", lw_an);
    longest->add_option("--combined", lw_comb);
    longest->add_option("--forbid", lw_forbid, "forbidden factor (repeatable)");
    longest->add_option("--exponent", lw_exp, "freeness cap, e.g. 5 or 2,4");
    longest->add_option("--ban", lw_ban, "pseudosquare ban KIND:MIN (perm, trans, trans2, morphic)");
    longest->add_option("--alphabet", lw_k)->check(CLI::Range(1, psq::kMaxAlphabet));
    longest->add_option("--cutoff", common.cutoff)->check(CLI::PositiveNumber);

    // table
    std::size_t amax = 10, bmax = 13;
    std::string table_out;
    auto* table = app.add_subcommand("table", "longest binary words with a squares, b antisquares");
    table->add_option("--amax", amax);
    table->add_option("--bmax", bmax);
    table->add_option("--cutoff", common.cutoff)->check(CLI::PositiveNumber);
    table->add_option("--out", table_out, "write TSV here");

    // anyalpha
    std::string aa_kind = "perm";
    std::size_t aa_min = 2;
    bool aa_bidir = false;
    auto* anyalpha = app.add_subcommand("anyalpha", "longest word over any alphabet avoiding pseudosquares");
    anyalpha->add_option("--kind", aa_kind, "perm | trans");
    anyalpha->add_option("--min", aa_min)->check(CLI::PositiveNumber);
    anyalpha->add_flag("--bidirectional", aa_bidir);
    anyalpha->add_option("--cutoff", common.cutoff)->check(CLI::PositiveNumber);

    // match
    std::string mx, my;
    std::optional<std::size_t> max_image;
    auto* match = app.add_subcommand("match", "is y a morphic image of x?");
    match->add_option("x", mx)->required();
    match->add_option("y", my)->required();
    match->add_option("--max-image", max_image, "cap on the total image length");

    // scan
    std::string scan_word, scan_kind = "perm";
    std::size_t scan_min = 2, scan_max = SIZE_MAX;
    bool scan_bidir = false;
    auto* scan = app.add_subcommand("scan", "first pseudosquare in a word");
    scan->add_option("word", scan_word)->required();
    scan->add_option("--kind", scan_kind, "perm | trans | morphic");
    scan->add_option("--min", scan_min)->check(CLI::PositiveNumber);
    scan->add_option("--max", scan_max);
    scan->add_option("--max-image", max_image);
    scan->add_flag("--bidirectional", scan_bidir);

    // discover
    std::size_t da = 5, db = 5, dq = 36;
    psq::DiscoverOptions dopts;
    dopts.max_results = 1;
    std::vector<std::string> dprefix;
    auto* discover = app.add_subcommand("discover", "search for q-uniform morphisms within a budget");
    discover->add_option("--a", da);
    discover->add_option("--b", db);
    discover->add_option("--q", dq)->check(CLI::PositiveNumber);
    discover->add_option("--check-len", dopts.check_len);
    discover->add_option("--max-results", dopts.max_results);
    discover->add_option("--node-limit", dopts.node_limit);
    discover->add_option("--prefix", dprefix, "forced prefixes of h(0), h(1), h(2)");

    // verify
    std::string claim;
    auto* verify = app.add_subcommand("verify", "re-derive a claim");
    verify->add_option("--claim", claim,
                       "prop1 | thm2:NAME | thm2:all | cor3 | thm4 | thm7 | thm9:direct | "
                       "thm9:reduction | thm10:props|ochem44|antisquare_scan|morphic_scan|all")
        ->required();
    verify->add_option("--cutoff", common.cutoff)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*count) {
            const Word w = Word::parse(count_word);
            const psq::FactorInventory inv = psq::inventory(w);
            if (common.json_out) {
                json j;
                j["word"] = w.str();
                j["squares"] = words_json(inv.squares);
                j["antisquares"] = words_json(inv.antisquares);
                std::cout << j.dump() << '\n';
            } else {
                print_words("squares", inv.squares);
                print_words("antisquares", inv.antisquares);
            }
        } else if (*exponent) {
            const Word w = Word::parse(exp_word);
            const psq::Exponent e = psq::critical_exponent(w);
            std::optional<bool> free;
            std::optional<psq::FreenessSpec> spec;
            if (!exp_free.empty()) {
                spec = psq::FreenessSpec::parse(exp_free);
                free = psq::is_en_free(w, *spec);
            }
            if (common.json_out) {
                json j;
                j["word"] = w.str();
                j["critical_exponent"] = e.str();
                if (free) {
                    j["spec"] = spec->str();
                    j["free"] = *free;
                }
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "critical exponent: " << e.str() << '\n';
                if (free)
                    std::cout << spec->str() << "-free: " << (*free ? "yes" : "no") << '\n';
            }
        } else if (*applyc) {
            const psq::Morphism h = load_morphism(morph_file, morph_catalog);
            const Word img = psq::apply(h, Word::parse(apply_word, h.domain_size()));
            std::cout << (common.json_out ? json{{"image", img.str()}}.dump() : img.str()) << '\n';
        } else if (*fixpoint) {
            const psq::Morphism h = load_morphism(morph_file, morph_catalog);
            Word w = psq::fixed_point_prefix(h, psq::Symbol(fix_seed), fix_len);
            if (fix_coding) {
                if (morph_catalog.empty() || !psq::catalog_lookup(morph_catalog).coding)
                    throw UsageError("--coding needs a --catalog entry that has a coding");
                w = psq::apply(*psq::catalog_lookup(morph_catalog).coding, w);
            }
            std::cout << (common.json_out ? json{{"prefix", w.str()}}.dump() : w.str()) << '\n';
        } else if (*enumerate) {
            psq::EnumerationSpec spec{enum_k, enum_n, {}};
            if (enum_filter == "all")
                spec.accepts = psq::accept_all();
            else if (enum_filter == "squarefree")
                spec.accepts = psq::squarefree_extension();
            else if (enum_filter == "dejean")
                spec.accepts = psq::freeness_extension(psq::dejean_ternary_spec());
            else
                spec.accepts = psq::freeness_extension(psq::FreenessSpec::parse(enum_filter));
            std::vector<std::string> out;
            const std::size_t n = psq::enumerate_length(spec, enum_n, [&](std::span<const psq::Symbol> u) {
                if (!count_only)
                    out.push_back(Word(std::vector<psq::Symbol>(u.begin(), u.end()), enum_k).str());
                return true;
            });
            if (common.json_out) {
                json j;
                j["alphabet"] = enum_k;
                j["length"] = enum_n;
                j["filter"] = enum_filter;
                j["count"] = n;
                if (!count_only)
                    j["words"] = out;
                std::cout << j.dump() << '\n';
            } else {
                for (const std::string& s : out)
                    std::cout << s << '\n';
                if (count_only)
                    std::cout << n << '\n';
            }
        } else if (*longest) {
            psq::SearchConstraint c;
            c.max_squares = lw_sq;
            c.max_antisquares = lw_an;
            c.max_combined = lw_comb;
            for (const std::string& f : lw_forbid)
                c.forbidden_factors.push_back(Word::parse(f, lw_k));
            if (!lw_exp.empty())
                c.exponent_cap = psq::FreenessSpec::parse(lw_exp);
            for (const std::string& b : lw_ban) {
                const auto colon = b.find(':');
                if (colon == std::string::npos)
                    throw UsageError("--ban expects KIND:MIN");
                psq::PseudosquareBan ban;
                std::string kind = b.substr(0, colon);
                if (kind == "trans2") {
                    ban.bidirectional = true;
                    kind = "trans";
                }
                ban.kind = psq::parse_kind(kind);
                ban.min_len = std::stoul(b.substr(colon + 1));
                c.pseudosquare_bans.push_back(ban);
            }
            const psq::SearchOutcome o = psq::longest_word(c, lw_k, common.search());
            if (common.json_out) {
                json j;
                j["constraint"] = json::parse(c.json());
                j["alphabet"] = lw_k;
                j["cutoff"] = common.cutoff;
                j["outcome"] = outcome_json(o);
                std::cout << j.dump() << '\n';
            } else {
                print_outcome(o);
            }
        } else if (*table) {
            const psq::SearchTable t = psq::build_table(amax, bmax, common.search());
            if (!table_out.empty()) {
                std::ofstream out(table_out);
                if (!out)
                    throw UsageError("cannot write '" + table_out + "'");
                out << psq::table_tsv(t);
            }
            if (common.json_out) {
                json j;
                j["amax"] = amax;
                j["bmax"] = bmax;
                j["cutoff"] = common.cutoff;
                auto rows = json::array();
                for (const auto& row : t) {
                    auto r = json::array();
                    for (const psq::SearchOutcome& o : row)
                        r.push_back(outcome_json(o));
                    rows.push_back(r);
                }
                j["cells"] = rows;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << psq::table_rows(t);
            }
        } else if (*anyalpha) {
            const psq::PseudosquareKind kind = psq::parse_kind(aa_kind);
            if (kind == psq::PseudosquareKind::morphic)
                throw UsageError("anyalpha supports perm and trans");
            const psq::SearchOutcome o =
                psq::longest_word_any_alphabet(kind, aa_min, aa_bidir, common.search());
            if (common.json_out) {
                json j;
                j["kind"] = std::string(psq::to_string(kind));
                j["min_len"] = aa_min;
                j["bidirectional"] = aa_bidir;
                j["cutoff"] = common.cutoff;
                j["outcome"] = outcome_json(o);
                std::cout << j.dump() << '\n';
            } else {
                print_outcome(o);
            }
        } else if (*match) {
            psq::MatchBudget budget;
            if (max_image)
                budget.max_total_image = *max_image;
            const Word x = Word::parse(mx);
            const Word y = Word::parse(my);
            const auto h = psq::morphism_match(x, y, budget);
            if (common.json_out) {
                json j;
                j["x"] = x.str();
                j["y"] = y.str();
                j["match"] = h.has_value();
                if (h) {
                    auto imgs = json::array();
                    for (const Word& img : h->images())
                        imgs.push_back(img.str());
                    j["images"] = imgs;
                }
                std::cout << j.dump() << '\n';
            } else if (h) {
                std::cout << "match\n" << h->str();
            } else {
                std::cout << "no match\n";
            }
        } else if (*scan) {
            const Word w = Word::parse(scan_word);
            const psq::PseudosquareKind kind = psq::parse_kind(scan_kind);
            std::optional<psq::PseudosquareHit> hit;
            switch (kind) {
            case psq::PseudosquareKind::permutation:
                hit = psq::find_permutation_pseudosquare(w, scan_min);
                break;
            case psq::PseudosquareKind::transformation:
                hit = psq::find_transformation_pseudosquare(w, scan_min, scan_bidir);
                break;
            case psq::PseudosquareKind::morphic: {
                psq::MatchBudget budget;
                if (max_image)
                    budget.max_total_image = *max_image;
                hit = psq::find_morphic_pseudosquare(w, scan_min, scan_max, budget);
                break;
            }
            }
            if (common.json_out)
                std::cout << (hit ? hit->json() : std::string("null")) << '\n';
            else if (hit)
                std::cout << "hit at " << hit->position << ": " << hit->factor().str() << " (x = "
                          << hit->x.str() << ", " << psq::to_string(hit->orientation) << ")\n";
            else
                std::cout << "none\n";
        } else if (*discover) {
            for (const std::string& p : dprefix)
                dopts.image_prefixes.push_back(Word::parse(p, 2));
            auto found = json::array();
            const psq::DiscoverStats stats =
                psq::discover_uniform_morphism(da, db, dq, dopts, [&](const psq::Morphism& h) {
                    if (common.json_out) {
                        auto imgs = json::array();
                        for (const Word& img : h.images())
                            imgs.push_back(img.str());
                        found.push_back(imgs);
                    } else {
                        std::cout << h.str() << '\n';
                    }
                    return true;
                });
            if (common.json_out) {
                json j;
                j["a"] = da;
                j["b"] = db;
                j["q"] = dq;
                j["check_len"] = dopts.check_len;
                j["found"] = found;
                j["nodes"] = stats.nodes;
                j["node_limit_hit"] = stats.node_limit_hit;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << "found: " << stats.found << '\n';
            }
        } else if (*verify) {
            const psq::VerificationReport r = psq::verify_claim(claim, common.search());
            if (common.json_out)
                std::cout << r.json() << '\n';
            else
                std::cout << r.claim_id << ": " << (r.passed ? "PASS" : "FAIL") << '\n';
            return r.passed ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "psq: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "psq: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "psq: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "psq: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
