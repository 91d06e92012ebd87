#include "tourn/bits.hpp"

#include <algorithm>

namespace tourn {

Bitset Bitset::full(std::size_t size)
{
    Bitset b(size);
    std::fill(b.words_.begin(), b.words_.end(), ~Word{0});
    if (size % word_bits != 0 && !b.words_.empty())
        b.words_.back() = (Word{1} << (size % word_bits)) - 1;
    return b;
}

void Bitset::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

bool Bitset::any() const
{
    return std::any_of(words_.begin(), words_.end(), [] (Word w) { return w != 0; });
}

std::size_t Bitset::find_next(std::size_t from) const
{
    if (from >= size_)
        return size_;
    std::size_t w = from / word_bits;
    Word bits = words_[w] & (~Word{0} << (from % word_bits));
    while (true) {
        if (bits != 0)
            return w * word_bits + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size())
            return size_;
        bits = words_[w];
    }
}

Bitset& Bitset::operator&=(const Bitset& other)
{
    kernels::and_into(words_, other.words_);
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& other)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

Bitset& Bitset::and_not(const Bitset& other)
{
    kernels::and_into(words_, other.words_, true);
    return *this;
}

void Bitset::and_row(std::span<const Word> row, bool complement) { kernels::and_into(words_, row, complement); }

std::vector<int> Bitset::to_indices() const
{
    std::vector<int> out;
    out.reserve(count());
    for_each([&] (int i) { out.push_back(i); });
    return out;
}

Bitset make_mask(std::size_t size, std::span<const int> indices)
{
    Bitset b(size);
    for (int i : indices)
        b.set(static_cast<std::size_t>(i));
    return b;
}

} // namespace tourn
