#include <algorithm>
#include <stdexcept>

#include "psq/generator.hpp"
#include "psq/search.hpp"

namespace psq {

bool morphism_within_budget(const Morphism& h, std::size_t a, std::size_t b,
                            std::size_t check_len)
{
    if (h.domain_size() < 3 || h.target_alphabet() != 2)
        throw std::invalid_argument("morphism_within_budget: need a ternary-to-binary morphism");
    ImageScanOptions opts;
    opts.max_square_order = check_len * h.max_image_length();
    opts.max_antisquare_order = opts.max_square_order;
    opts.square_limit = a;
    opts.antisquare_limit = b;
    const ImageScanResult r = scan_images(h, {3, check_len, squarefree_extension()}, opts);
    return !r.stopped_early;
}

namespace {

// Short squarefree words u over {0..c-1} with u c squarefree, |u| <= 3.
std::vector<std::vector<Symbol>> left_contexts(int c)
{
    std::vector<std::vector<Symbol>> out;
    if (c == 0)
        return {{}};
    EnumerationSpec spec{c, 3, squarefree_extension()};
    enumerate(spec, [&](std::span<const Symbol> u) {
        std::vector<Symbol> v(u.begin(), u.end());
        v.push_back(Symbol(c));
        if (!square_at_end(v) && is_squarefree(Word(v, 3))) {
            v.pop_back();
            out.push_back(std::move(v));
        }
        return true;
    });
    return out;
}

class Discoverer
{
public:
    Discoverer(std::size_t a, std::size_t b, std::size_t q, const DiscoverOptions& options,
               const std::function<bool(const Morphism&)>& found)
      : a_(a), b_(b), q_(q), options_(options), found_(found)
    {
        for (int c = 0; c < 3; ++c)
            contexts_[c] = left_contexts(c);
    }

    DiscoverStats run()
    {
        rec();
        return stats_;
    }

private:
    struct Member
    {
        std::vector<Symbol> buffer; // h(u) followed by the partial image
    };

    bool known(const std::vector<std::vector<Symbol>>& reg, const Symbol* p, std::size_t len) const
    {
        for (const auto& f : reg)
            if (f.size() == len && std::equal(f.begin(), f.end(), p))
                return true;
        return false;
    }

    // Registers squares/antisquares ending at `end` in buf. False if the
    // budget breaks.
    bool register_at(const std::vector<Symbol>& buf, std::size_t end)
    {
        const Symbol* w = buf.data();
        for (std::size_t half = 1; 2 * half <= end; ++half) {
            const std::size_t s = end - 2 * half;
            std::size_t k = half;
            while (k > 0 && w[s + k - 1] == w[s + half + k - 1])
                --k;
            if (k == 0 && !known(squares_, w + s, 2 * half)) {
                if (squares_.size() >= a_)
                    return false;
                squares_.emplace_back(w + s, w + s + 2 * half);
            }
            k = half;
            while (k > 0 && w[s + k - 1] != w[s + half + k - 1])
                --k;
            if (k == 0 && !known(antisquares_, w + s, 2 * half)) {
                if (antisquares_.size() >= b_)
                    return false;
                antisquares_.emplace_back(w + s, w + s + 2 * half);
            }
        }
        return true;
    }

    bool open_letter(int c)
    {
        members_.clear();
        for (const auto& u : contexts_[c]) {
            Member m;
            for (Symbol x : u)
                m.buffer.insert(m.buffer.end(), bits_.begin() + std::ptrdiff_t(x * q_),
                                bits_.begin() + std::ptrdiff_t((x + 1) * q_));
            for (std::size_t end = 1; end <= m.buffer.size(); ++end)
                if (!register_at(m.buffer, end))
                    return false;
            members_.push_back(std::move(m));
        }
        return true;
    }

    // Returns false to stop the whole search.
    bool rec()
    {
        const std::size_t pos = bits_.size();
        if (pos == 3 * q_)
            return finish();
        const int c = int(pos / q_);
        const std::size_t offset = pos % q_;
        const std::vector<Word>& pre = options_.image_prefixes;
        for (int bit = 0; bit < 2; ++bit) {
            if (std::size_t(c) < pre.size() && offset < pre[c].size() && pre[c][offset] != bit)
                continue;
            if (options_.node_limit && stats_.nodes >= options_.node_limit) {
                stats_.node_limit_hit = true;
                return false;
            }
            ++stats_.nodes;
            const std::size_t sq = squares_.size();
            const std::size_t an = antisquares_.size();
            std::vector<Member> saved;
            bool ok = true;
            if (offset == 0) {
                saved = std::move(members_);
                ok = open_letter(c);
            }
            bits_.push_back(Symbol(bit));
            for (Member& m : members_)
                m.buffer.push_back(Symbol(bit));
            for (Member& m : members_) {
                if (!ok)
                    break;
                ok = register_at(m.buffer, m.buffer.size());
            }
            bool go_on = true;
            if (ok)
                go_on = rec();
            bits_.pop_back();
            for (Member& m : members_)
                m.buffer.pop_back();
            if (offset == 0)
                members_ = std::move(saved);
            squares_.resize(sq);
            antisquares_.resize(an);
            if (!go_on)
                return false;
        }
        return true;
    }

    bool finish()
    {
        std::vector<Word> images;
        for (int c = 0; c < 3; ++c)
            images.emplace_back(std::vector<Symbol>(bits_.begin() + std::ptrdiff_t(c * q_),
                                                    bits_.begin() + std::ptrdiff_t((c + 1) * q_)),
                                2);
        if (images[0] == images[1] || images[0] == images[2] || images[1] == images[2])
            return true;
        Morphism h(images, 2);
        if (!morphism_within_budget(h, a_, b_, options_.check_len))
            return true;
        ++stats_.found;
        if (!found_(h))
            return false;
        return stats_.found < options_.max_results;
    }

    std::size_t a_, b_, q_;
    const DiscoverOptions& options_;
    const std::function<bool(const Morphism&)>& found_;
    std::vector<std::vector<Symbol>> contexts_[3];
    std::vector<Symbol> bits_;
    std::vector<Member> members_;
    std::vector<std::vector<Symbol>> squares_;
    std::vector<std::vector<Symbol>> antisquares_;
    DiscoverStats stats_;
};

} // namespace

DiscoverStats discover_uniform_morphism(std::size_t a, std::size_t b, std::size_t q,
                                        const DiscoverOptions& options,
                                        const std::function<bool(const Morphism&)>& found)
{
    if (q < 1)
        throw std::invalid_argument("discover: image length must be positive");
    if (options.image_prefixes.size() > 3)
        throw std::invalid_argument("discover: at most three image prefixes");
    for (const Word& p : options.image_prefixes)
        if (p.size() > q || p.alphabet_size() > 2)
            throw std::invalid_argument("discover: image prefix must be binary of length <= q");
    if (options.max_results == 0)
        return {};
    Discoverer d(a, b, q, options, found);
    return d.run();
}

} // namespace psq
