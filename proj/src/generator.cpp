#include "psq/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace psq {

ExtensionTest accept_all()
{
    return [](std::span<const Symbol>) { return true; };
}

ExtensionTest squarefree_extension()
{
    return [](std::span<const Symbol> w) { return !square_at_end(w); };
}

ExtensionTest freeness_extension(const FreenessSpec& spec)
{
    spec.validate();
    return [spec](std::span<const Symbol> w) { return en_free_at_end(w, spec); };
}

FreenessSpec dejean_ternary_spec()
{
    return FreenessSpec{Exponent(7, 4), true, 1};
}

namespace {

struct Enumerator
{
    const EnumerationSpec& spec;
    const WordVisitor& visit;
    std::vector<Symbol> word;
    std::size_t visited = 0;
    bool stopped = false;

    void run()
    {
        ++visited;
        if (!visit(word)) {
            stopped = true;
            return;
        }
        if (word.size() >= spec.max_length)
            return;
        for (int a = 0; a < spec.alphabet_size && !stopped; ++a) {
            word.push_back(Symbol(a));
            if (!spec.accepts || spec.accepts(word))
                run();
            word.pop_back();
        }
    }
};

} // namespace

std::size_t enumerate(const EnumerationSpec& spec, const WordVisitor& visit)
{
    if (spec.alphabet_size < 1 || spec.alphabet_size > kMaxAlphabet)
        throw std::invalid_argument("enumerate: bad alphabet size");
    Enumerator e{spec, visit, {}, 0, false};
    e.word.reserve(spec.max_length);
    e.run();
    return e.visited;
}

std::vector<Word> collect(const EnumerationSpec& spec)
{
    std::vector<Word> out;
    enumerate(spec, [&](std::span<const Symbol> w) {
        out.emplace_back(std::vector<Symbol>(w.begin(), w.end()), spec.alphabet_size);
        return true;
    });
    return out;
}

std::size_t enumerate_length(const EnumerationSpec& spec, std::size_t n, const WordVisitor& visit)
{
    EnumerationSpec bounded = spec;
    bounded.max_length = n;
    std::size_t count = 0;
    enumerate(bounded, [&](std::span<const Symbol> w) {
        if (w.size() != n)
            return true;
        ++count;
        return visit(w);
    });
    return count;
}

std::size_t squarefree_ternary(std::size_t n, const WordVisitor& visit)
{
    return enumerate_length({3, n, squarefree_extension()}, n, visit);
}

std::size_t dejean_free_ternary(std::size_t n, const WordVisitor& visit)
{
    return enumerate_length({3, n, freeness_extension(dejean_ternary_spec())}, n, visit);
}

WordSet ImageScanResult::square_set() const
{
    WordSet out;
    for (const auto& [sq, _] : squares)
        out.insert(sq);
    return out;
}

WordSet ImageScanResult::antisquare_set() const
{
    WordSet out;
    for (const auto& [sq, _] : antisquares)
        out.insert(sq);
    return out;
}

std::size_t covering_domain_length(const Morphism& h, std::size_t factor_length)
{
    const std::size_t lo = std::max<std::size_t>(h.min_image_length(), 1);
    return (factor_length + lo - 1) / lo + 2;
}

ImageScanResult scan_images(const Morphism& h, const EnumerationSpec& domain,
                            const ImageScanOptions& options)
{
    if (domain.alphabet_size > h.domain_size())
        throw std::invalid_argument("scan_images: domain alphabet exceeds morphism domain");
    if (options.max_antisquare_order > 0 && h.target_alphabet() > 2)
        throw std::invalid_argument("scan_images: antisquares need a binary target");

    ImageScanResult result;
    std::vector<Symbol> image;
    std::vector<std::size_t> block_start; // image length before each domain letter

    auto record = [&](std::map<Word, Word, ShortLex>& into, std::size_t start, std::size_t len,
                      std::span<const Symbol> u) {
        Word factor(std::vector<Symbol>(image.begin() + start, image.begin() + start + len),
                    h.target_alphabet());
        if (!into.contains(factor))
            into.emplace(std::move(factor),
                         Word(std::vector<Symbol>(u.begin(), u.end()), h.domain_size()));
    };

    enumerate(domain, [&](std::span<const Symbol> w) {
        // Resynchronize the image with the current domain word.
        while (block_start.size() >= w.size() && !block_start.empty()) {
            image.resize(block_start.back());
            block_start.pop_back();
        }
        if (w.empty()) {
            ++result.domain_words;
            return true;
        }
        block_start.push_back(image.size());
        const Word& img = h.image(w.back());
        image.insert(image.end(), img.begin(), img.end());
        ++result.domain_words;

        const std::size_t from = block_start.back();
        for (std::size_t j = from; j < image.size(); ++j) {
            const std::size_t end = j + 1;
            const std::size_t sq_top = std::min(options.max_square_order, end / 2);
            for (std::size_t half = 1; half <= sq_top; ++half) {
                std::size_t k = 0;
                while (k < half && image[j - k] == image[j - k - half])
                    ++k;
                if (k == half)
                    record(result.squares, end - 2 * half, 2 * half, w);
            }
            const std::size_t anti_top = std::min(options.max_antisquare_order, end / 2);
            for (std::size_t half = 1; half <= anti_top; ++half) {
                std::size_t k = 0;
                while (k < half && image[j - k] != image[j - k - half])
                    ++k;
                if (k == half)
                    record(result.antisquares, end - 2 * half, 2 * half, w);
            }
            for (const Word& f : options.watched_factors) {
                if (f.size() <= end &&
                    std::equal(f.begin(), f.end(), image.begin() + (end - f.size())))
                    record(result.watched, end - f.size(), f.size(), w);
            }
        }
        if (result.squares.size() > options.square_limit ||
            result.antisquares.size() > options.antisquare_limit) {
            result.stopped_early = true;
            return false;
        }
        return true;
    });
    return result;
}

} // namespace psq
