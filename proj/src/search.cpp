#include "psq/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "psq/parallel.hpp"

namespace psq {

unsigned default_workers()
{
    if (const char* env = std::getenv("PSQ_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return unsigned(v);
    }
    return 1;
}

// ---------------------------------------------------------------------------
// SearchConstraint

SearchConstraint SearchConstraint::squares_antisquares(std::size_t a, std::size_t b)
{
    SearchConstraint c;
    c.max_squares = a;
    c.max_antisquares = b;
    return c;
}

void SearchConstraint::validate() const
{
    if (!max_squares && !max_antisquares && !max_combined && forbidden_factors.empty() &&
        !exponent_cap && pseudosquare_bans.empty())
        throw std::invalid_argument("search constraint is empty");
    if (exponent_cap)
        exponent_cap->validate();
    for (const Word& f : forbidden_factors)
        if (f.empty())
            throw std::invalid_argument("empty forbidden factor");
    for (const PseudosquareBan& ban : pseudosquare_bans)
        if (ban.min_len < 1 || ban.min_len > ban.max_len)
            throw std::invalid_argument("pseudosquare ban needs 1 <= min_len <= max_len");
}

bool SearchConstraint::complement_invariant() const
{
    for (const Word& f : forbidden_factors) {
        if (f.alphabet_size() > 2)
            return false;
        const Word c = complement(f);
        if (std::find(forbidden_factors.begin(), forbidden_factors.end(), c) ==
            forbidden_factors.end())
            return false;
    }
    return true;
}

std::string SearchConstraint::json() const
{
    nlohmann::ordered_json j = nlohmann::json::object();
    if (max_squares)
        j["max_squares"] = *max_squares;
    if (max_antisquares)
        j["max_antisquares"] = *max_antisquares;
    if (max_combined)
        j["max_combined"] = *max_combined;
    if (!forbidden_factors.empty()) {
        auto arr = nlohmann::json::array();
        for (const Word& f : forbidden_factors)
            arr.push_back(f.str());
        j["forbidden_factors"] = arr;
    }
    if (exponent_cap)
        j["exponent_cap"] = exponent_cap->str();
    if (!pseudosquare_bans.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const PseudosquareBan& ban : pseudosquare_bans) {
            nlohmann::ordered_json b;
            b["kind"] = std::string(to_string(ban.kind));
            b["min_len"] = ban.min_len;
            if (ban.max_len != SIZE_MAX)
                b["max_len"] = ban.max_len;
            if (ban.kind == PseudosquareKind::morphic && ban.budget.max_total_image != SIZE_MAX)
                b["max_total_image"] = ban.budget.max_total_image;
            if (ban.kind == PseudosquareKind::transformation)
                b["bidirectional"] = ban.bidirectional;
            arr.push_back(b);
        }
        j["pseudosquare_bans"] = arr;
    }
    return j.dump();
}

// ---------------------------------------------------------------------------
// SearchState

SearchState::SearchState(const SearchConstraint& constraint, int alphabet_size)
  : constraint_(constraint),
    alphabet_size_(alphabet_size)
{
    constraint_.validate();
    if (alphabet_size_ < 0 || alphabet_size_ > kMaxAlphabet)
        throw std::invalid_argument("SearchState: bad alphabet size");
    if (constraint_.tracks_antisquares() && alphabet_size_ != 2)
        throw std::invalid_argument("antisquare budgets need the binary alphabet");
}

int SearchState::symbol_limit() const noexcept
{
    if (alphabet_size_ > 0)
        return alphabet_size_;
    return max_symbol_.empty() ? 1 : std::min(kMaxAlphabet, max_symbol_.back() + 2);
}

bool SearchState::known(const std::vector<Occurrence>& list, std::size_t start,
                        std::size_t length) const
{
    for (const Occurrence& o : list)
        if (o.length == length && std::memcmp(&word_[o.start], &word_[start], length) == 0)
            return true;
    return false;
}

bool SearchState::push(Symbol s)
{
    if (int(s) >= symbol_limit())
        throw std::invalid_argument("SearchState::push: symbol outside alphabet");
    word_.push_back(s);
    const std::size_t n = word_.size();
    const std::size_t sq_before = squares_.size();
    const std::size_t an_before = antisquares_.size();

    auto reject = [&] {
        squares_.resize(sq_before);
        antisquares_.resize(an_before);
        word_.pop_back();
        return false;
    };

    for (const Word& f : constraint_.forbidden_factors) {
        if (f.size() <= n &&
            std::equal(f.begin(), f.end(), word_.end() - std::ptrdiff_t(f.size())))
            return reject();
    }

    const bool track_sq = constraint_.tracks_squares();
    const bool track_an = constraint_.tracks_antisquares();
    if (track_sq || track_an) {
        const std::size_t max_sq = constraint_.max_squares.value_or(SIZE_MAX);
        const std::size_t max_an = constraint_.max_antisquares.value_or(SIZE_MAX);
        const std::size_t max_comb = constraint_.max_combined.value_or(SIZE_MAX);
        const Symbol* w = word_.data();
        for (std::size_t half = 1; 2 * half <= n; ++half) {
            const std::size_t a = n - 2 * half;
            const std::size_t b = n - half;
            if (track_sq) {
                std::size_t k = half;
                while (k > 0 && w[a + k - 1] == w[b + k - 1])
                    --k;
                if (k == 0 && !known(squares_, a, 2 * half)) {
                    if (squares_.size() >= max_sq ||
                        squares_.size() + antisquares_.size() >= max_comb)
                        return reject();
                    squares_.push_back({a, 2 * half});
                }
            }
            if (track_an) {
                std::size_t k = half;
                while (k > 0 && w[a + k - 1] != w[b + k - 1])
                    --k;
                if (k == 0 && !known(antisquares_, a, 2 * half)) {
                    if (antisquares_.size() >= max_an ||
                        squares_.size() + antisquares_.size() >= max_comb)
                        return reject();
                    antisquares_.push_back({a, 2 * half});
                }
            }
        }
    }

    if (constraint_.exponent_cap && !en_free_at_end(word_, *constraint_.exponent_cap))
        return reject();

    for (const PseudosquareBan& ban : constraint_.pseudosquare_bans) {
        bool hit = false;
        switch (ban.kind) {
        case PseudosquareKind::permutation:
            hit = coding_pseudosquare_at_end(word_, ban.min_len, true, false);
            break;
        case PseudosquareKind::transformation:
            hit = coding_pseudosquare_at_end(word_, ban.min_len, false, ban.bidirectional);
            break;
        case PseudosquareKind::morphic:
            hit = morphic_pseudosquare_at_end(word_, ban.min_len, ban.max_len, ban.budget);
            break;
        }
        if (hit)
            return reject();
    }

    undo_.emplace_back(std::uint32_t(squares_.size() - sq_before),
                       std::uint32_t(antisquares_.size() - an_before));
    if (alphabet_size_ == 0)
        max_symbol_.push_back(max_symbol_.empty() ? s : std::max<int>(max_symbol_.back(), s));
    return true;
}

void SearchState::pop()
{
    if (word_.empty())
        throw std::logic_error("SearchState::pop on empty word");
    const auto [sq, an] = undo_.back();
    undo_.pop_back();
    squares_.resize(squares_.size() - sq);
    antisquares_.resize(antisquares_.size() - an);
    word_.pop_back();
    if (alphabet_size_ == 0)
        max_symbol_.pop_back();
}

Word SearchState::to_word() const
{
    int k = alphabet_size_;
    if (k == 0)
        k = std::max(2, max_symbol_.empty() ? 1 : max_symbol_.back() + 1);
    return Word(word_, k);
}

WordSet SearchState::squares() const
{
    WordSet out;
    const Word w = to_word();
    for (const Occurrence& o : squares_)
        out.insert(w.factor(o.start, o.length));
    return out;
}

WordSet SearchState::antisquares() const
{
    WordSet out;
    const Word w = to_word();
    for (const Occurrence& o : antisquares_)
        out.insert(w.factor(o.start, o.length));
    return out;
}

// ---------------------------------------------------------------------------
// Depth-first search

std::string SearchOutcome::json() const
{
    nlohmann::ordered_json j;
    j["max_length_found"] = max_length_found;
    j["exhausted"] = exhausted;
    j["witness"] = witness.str();
    j["nodes_visited"] = nodes_visited;
    return j.dump();
}

namespace {

struct Dfs
{
    Dfs(SearchState& s, std::size_t c) : state(s), cutoff(c) {}

    SearchState& state;
    std::size_t cutoff;
    std::size_t best = 0;
    std::vector<Symbol> witness;
    std::uint64_t nodes = 0;
    bool hit_cutoff = false;
    // Set when an earlier task reached the cutoff; this subtree no longer matters.
    const std::atomic<std::size_t>* first_cut = nullptr;
    std::size_t task_index = 0;

    // Visits the subtree below the current state (not counting the state
    // itself). Returns true once the cutoff depth has been reached.
    bool below()
    {
        const int limit = state.symbol_limit();
        for (int c = 0; c < limit; ++c) {
            if (first_cut && first_cut->load(std::memory_order_relaxed) < task_index)
                return true;
            if (!state.push(Symbol(c)))
                continue;
            ++nodes;
            if (state.size() > best) {
                best = state.size();
                witness.assign(state.word().begin(), state.word().end());
            }
            if (state.size() >= cutoff) {
                hit_cutoff = true;
                state.pop();
                return true;
            }
            const bool stop = below();
            state.pop();
            if (stop)
                return true;
        }
        return false;
    }
};

struct Task
{
    std::vector<Symbol> prefix;
};

struct TaskResult
{
    std::size_t best = 0;
    std::vector<Symbol> witness;
    bool hit_cutoff = false;
    std::uint64_t nodes = 0;
    bool done = false;
};

// Collects the surviving nodes at depth `depth` in DFS order. Shallower dead
// ends feed `best`/`witness`.
void expand_frontier(SearchState& state, std::size_t depth, std::vector<Task>& frontier,
                     std::size_t& best, std::vector<Symbol>& witness, std::uint64_t& nodes,
                     int first_limit)
{
    if (state.size() > best) {
        best = state.size();
        witness.assign(state.word().begin(), state.word().end());
    }
    if (state.size() == depth) {
        frontier.push_back({std::vector<Symbol>(state.word().begin(), state.word().end())});
        return;
    }
    const int limit = state.size() == 0 && first_limit > 0 ? first_limit : state.symbol_limit();
    for (int c = 0; c < limit; ++c) {
        if (!state.push(Symbol(c)))
            continue;
        ++nodes;
        expand_frontier(state, depth, frontier, best, witness, nodes, first_limit);
        state.pop();
    }
}

SearchOutcome run_search(const SearchConstraint& constraint, int alphabet_size,
                         const SearchOptions& options, bool fix_first)
{
    if (options.cutoff < 1)
        throw std::invalid_argument("search cutoff must be at least 1");
    const int first_limit = fix_first ? 1 : 0;
    const std::size_t split = std::min(options.split_depth, options.cutoff - 1);

    SearchState root(constraint, alphabet_size);
    std::vector<Task> frontier;
    std::size_t best = 0;
    std::vector<Symbol> witness;
    std::uint64_t nodes = 1; // the empty word
    expand_frontier(root, split, frontier, best, witness, nodes, first_limit);

    std::vector<TaskResult> results(frontier.size());
    std::atomic<std::size_t> first_cut{SIZE_MAX};
    std::atomic<std::size_t> finished{0};

    run_tasks(
        frontier.size(), options.workers,
        [&](std::size_t i) {
            SearchState state(constraint, alphabet_size);
            for (Symbol s : frontier[i].prefix)
                if (!state.push(s))
                    throw std::logic_error("search frontier prefix no longer admissible");
            Dfs dfs{state, options.cutoff};
            dfs.first_cut = &first_cut;
            dfs.task_index = i;
            dfs.best = state.size();
            dfs.witness = frontier[i].prefix;
            dfs.below();
            results[i] = TaskResult{dfs.best, std::move(dfs.witness), dfs.hit_cutoff, dfs.nodes,
                                    true};
            if (dfs.hit_cutoff) {
                std::size_t cur = first_cut.load();
                while (i < cur && !first_cut.compare_exchange_weak(cur, i)) {
                }
            }
            const std::size_t f = ++finished;
            if (options.progress && (f % 256 == 0 || f == frontier.size()))
                options.progress("search: " + std::to_string(f) + "/" +
                                 std::to_string(frontier.size()) + " subtrees");
        },
        [&](std::size_t i) { return i > first_cut.load(); });

    SearchOutcome out;
    out.exhausted = true;
    std::size_t best_len = best;
    std::vector<Symbol> best_word = witness;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const TaskResult& r = results[i];
        if (!r.done)
            throw std::logic_error("search task skipped before the cutoff task");
        nodes += r.nodes;
        if (r.hit_cutoff) {
            best_len = r.best;
            best_word = r.witness;
            out.exhausted = false;
            break;
        }
        if (r.best > best_len) {
            best_len = r.best;
            best_word = r.witness;
        }
    }
    out.max_length_found = best_len;
    int k = alphabet_size;
    if (k == 0) {
        k = 2;
        for (Symbol s : best_word)
            k = std::max(k, int(s) + 1);
    }
    out.witness = Word(best_word, k);
    out.nodes_visited = nodes;
    // A cutoff within the frontier depth cannot happen: split < cutoff.
    return out;
}

} // namespace

SearchOutcome longest_word(const SearchConstraint& c, int alphabet_size,
                           const SearchOptions& options)
{
    if (alphabet_size < 1)
        throw std::invalid_argument("longest_word: alphabet size must be positive");
    const bool fix_first = options.use_symmetry && alphabet_size == 2 && c.complement_invariant();
    return run_search(c, alphabet_size, options, fix_first);
}

SearchOutcome longest_word_any_alphabet(PseudosquareKind kind, std::size_t min_len,
                                        bool bidirectional, const SearchOptions& options)
{
    SearchConstraint c;
    PseudosquareBan ban;
    ban.kind = kind;
    ban.min_len = min_len;
    ban.bidirectional = bidirectional;
    c.pseudosquare_bans.push_back(ban);
    return run_search(c, 0, options, false);
}

SearchTable build_table(std::size_t a_max, std::size_t b_max, const SearchOptions& options)
{
    SearchTable table(a_max + 1, std::vector<SearchOutcome>(b_max + 1));
    for (std::size_t a = 0; a <= a_max; ++a) {
        for (std::size_t b = 0; b <= b_max; ++b) {
            table[a][b] = longest_word(SearchConstraint::squares_antisquares(a, b), 2, options);
            if (options.progress)
                options.progress("table: cell (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") done");
        }
    }
    return table;
}

namespace {

std::string cell_text(const SearchOutcome& o)
{
    return o.exhausted ? std::to_string(o.max_length_found) : "inf";
}

} // namespace

std::string table_tsv(const SearchTable& table)
{
    std::ostringstream out;
    out << "a\\b";
    if (!table.empty())
        for (std::size_t b = 0; b < table.front().size(); ++b)
            out << '\t' << b;
    out << '\n';
    for (std::size_t a = 0; a < table.size(); ++a) {
        out << a;
        for (const SearchOutcome& o : table[a])
            out << '\t' << cell_text(o);
        out << '\n';
    }
    return out.str();
}

std::string table_rows(const SearchTable& table)
{
    std::ostringstream out;
    for (std::size_t a = 0; a < table.size(); ++a) {
        out << a << ':';
        for (const SearchOutcome& o : table[a])
            out << ' ' << cell_text(o);
        out << '\n';
    }
    return out.str();
}

} // namespace psq
