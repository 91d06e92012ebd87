#pragma once

#include "tourn/kernels.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tourn {

using Word = kernels::Word;
inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

// Fixed-size dynamic bitset. Bits past size() are always zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    static Bitset full(std::size_t size);

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
    void set(std::size_t i) { words_[i / word_bits] |= Word{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }
    void clear();

    std::size_t count() const { return kernels::popcount(words_); }
    bool any() const;
    bool none() const { return !any(); }

    // Index of the first set bit at or after `from`, or size() when there is none.
    std::size_t find_next(std::size_t from) const;
    std::size_t find_first() const { return find_next(0); }

    Bitset& operator&=(const Bitset& other);
    Bitset& operator|=(const Bitset& other);
    Bitset& and_not(const Bitset& other);
    void and_row(std::span<const Word> row, bool complement = false);

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    std::vector<int> to_indices() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                f(static_cast<int>(w * word_bits + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

// Dense row-major bit matrix; each row is padded to whole words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool test(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + c / word_bits] >> (c % word_bits)) & 1U;
    }
    void set(std::size_t r, std::size_t c) { data_[r * stride_ + c / word_bits] |= Word{1} << (c % word_bits); }
    void reset(std::size_t r, std::size_t c)
    {
        data_[r * stride_ + c / word_bits] &= ~(Word{1} << (c % word_bits));
    }
    void assign(std::size_t r, std::size_t c, bool value) { value ? set(r, c) : reset(r, c); }

    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

    std::size_t row_count(std::size_t r) const { return kernels::popcount(row(r)); }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

// Bitset over [0, size) with the given indices set.
Bitset make_mask(std::size_t size, std::span<const int> indices);

} // namespace tourn
