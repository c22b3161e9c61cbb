#include "psq/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace psq {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Morphism::Morphism(std::vector<Word> images, int target_alphabet)
  : images_(std::move(images))
{
    if (images_.empty())
        throw std::invalid_argument("morphism with empty domain");
    if (target_alphabet == 0) {
        target_alphabet = 2;
        for (const Word& img : images_)
            for (Symbol s : img)
                target_alphabet = std::max(target_alphabet, int(s) + 1);
    }
    target_alphabet_ = target_alphabet;
    for (Word& img : images_)
        img = img.with_alphabet(target_alphabet_);
}

Morphism Morphism::identity(int alphabet_size)
{
    std::vector<Word> images;
    for (int a = 0; a < alphabet_size; ++a)
        images.push_back(Word({Symbol(a)}, alphabet_size));
    return Morphism(std::move(images), alphabet_size);
}

Morphism Morphism::coding(const std::vector<Symbol>& letters, int target_alphabet)
{
    std::vector<Word> images;
    for (Symbol s : letters)
        images.push_back(Word({s}));
    return Morphism(std::move(images), target_alphabet);
}

Morphism Morphism::parse(std::string_view text, int target_alphabet)
{
    std::vector<Word> images;
    std::size_t start = 0;
    int line_no = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos)
            throw std::invalid_argument("morphism line " + std::to_string(line_no) +
                                        ": expected 'i -> image'");
        const std::string_view letter = trim(line.substr(0, arrow));
        const std::string_view image = trim(line.substr(arrow + 2));
        if (letter.size() != 1 || char_symbol(letter.front()) != images.size())
            throw std::invalid_argument("morphism line " + std::to_string(line_no) +
                                        ": letters must be listed in order 0, 1, ...");
        images.push_back(Word::parse(image, kMaxAlphabet));
    }
    return Morphism(std::move(images), target_alphabet);
}

std::string Morphism::str() const
{
    std::string out;
    for (std::size_t a = 0; a < images_.size(); ++a) {
        out += symbol_char(Symbol(a));
        out += " -> ";
        out += images_[a].str();
        out += '\n';
    }
    return out;
}

bool Morphism::is_nonerasing() const noexcept
{
    return std::none_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

std::optional<std::size_t> Morphism::uniform_length() const noexcept
{
    const std::size_t q = images_.front().size();
    for (const Word& w : images_)
        if (w.size() != q)
            return std::nullopt;
    return q;
}

std::size_t Morphism::min_image_length() const noexcept
{
    std::size_t m = images_.front().size();
    for (const Word& w : images_)
        m = std::min(m, w.size());
    return m;
}

std::size_t Morphism::max_image_length() const noexcept
{
    std::size_t m = 0;
    for (const Word& w : images_)
        m = std::max(m, w.size());
    return m;
}

Word apply(const Morphism& h, const Word& w)
{
    std::vector<Symbol> out;
    for (Symbol a : w) {
        if (a >= h.domain_size())
            throw std::invalid_argument("apply: letter " + std::to_string(int(a)) +
                                        " outside morphism domain");
        const Word& img = h.image(a);
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), h.target_alphabet());
}

Morphism compose(const Morphism& outer, const Morphism& inner)
{
    std::vector<Word> images;
    for (const Word& img : inner.images())
        images.push_back(apply(outer, img.with_alphabet(std::max(2, outer.domain_size()))));
    return Morphism(std::move(images), outer.target_alphabet());
}

Word fixed_point_prefix(const Morphism& h, Symbol seed, std::size_t n)
{
    if (seed >= h.domain_size())
        throw std::invalid_argument("fixed_point_prefix: seed outside domain");
    const Word& first = h.image(seed);
    if (first.size() < 2 || first[0] != seed)
        throw std::invalid_argument("fixed_point_prefix: morphism is not prolongable on seed");
    // The fixed point x satisfies x = h(x[0]) h(x[1]) ..., and the prefix
    // built so far always runs ahead of the letter being expanded.
    std::vector<Symbol> out(first.begin(), first.end());
    out.reserve(n + h.max_image_length());
    for (std::size_t next = 1; out.size() < n; ++next) {
        if (next >= out.size())
            throw std::invalid_argument("fixed_point_prefix: fixed point is finite");
        for (Symbol s : h.image(out[next])) {
            if (s >= h.domain_size())
                throw std::invalid_argument("fixed_point_prefix: image leaves domain");
            out.push_back(s);
        }
    }
    out.resize(n);
    return Word(std::move(out), h.target_alphabet());
}

std::size_t synchronization_span(const Morphism& h)
{
    const std::size_t lo = std::max<std::size_t>(h.min_image_length(), 1);
    const std::size_t hi = h.max_image_length();
    return (hi + lo - 1) / lo + 2;
}

std::optional<SyncCounterexample> find_desynchronization(const Morphism& h, std::size_t span)
{
    if (!h.is_nonerasing())
        throw std::invalid_argument("synchronization check needs a nonerasing morphism");
    if (span == 0)
        span = synchronization_span(h);
    const int k = h.domain_size();

    std::vector<Symbol> w;
    std::vector<std::size_t> starts; // image boundaries of h(w)
    // Odometer over all words of length exactly `span`; shorter words are
    // factors of these and every occurrence in them appears here too.
    w.assign(span, 0);
    while (true) {
        std::vector<Symbol> image;
        starts.clear();
        for (Symbol a : w) {
            starts.push_back(image.size());
            const Word& img = h.image(a);
            image.insert(image.end(), img.begin(), img.end());
        }
        const std::string_view hay(reinterpret_cast<const char*>(image.data()), image.size());
        for (int i = 0; i < k; ++i) {
            const std::string_view needle = h.image(Symbol(i)).bytes();
            for (std::size_t pos = hay.find(needle); pos != std::string_view::npos;
                 pos = hay.find(needle, pos + 1)) {
                const auto it = std::lower_bound(starts.begin(), starts.end(), pos);
                const bool aligned = it != starts.end() && *it == pos &&
                                     w[std::size_t(it - starts.begin())] == i;
                if (!aligned)
                    return SyncCounterexample{Word(w, k), Symbol(i), pos};
            }
        }
        std::size_t j = span;
        while (j > 0 && w[j - 1] == k - 1)
            w[--j] = 0;
        if (j == 0)
            break;
        ++w[j - 1];
    }
    return std::nullopt;
}

} // namespace psq
