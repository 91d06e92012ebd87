#include "tourn/kernels.hpp"

#include <bit>

namespace tourn::kernels {

namespace {

std::uint64_t popcount_scalar(std::span<const Word> a)
{
    std::uint64_t total = 0;
    for (Word w : a)
        total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::uint64_t popcount_and_scalar(std::span<const Word> a, std::span<const Word> b)
{
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::uint64_t popcount_xor_and_scalar(std::span<const Word> a, std::span<const Word> b,
                                      std::span<const Word> mask)
{
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::uint64_t>(std::popcount((a[i] ^ b[i]) & mask[i]));
    return total;
}

void and_into_scalar(std::span<Word> dst, std::span<const Word> src, bool complement)
{
    const Word flip = complement ? ~Word{0} : Word{0};
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] &= src[i] ^ flip;
}

constexpr KernelTable scalar{
    Backend::scalar,
    &popcount_scalar,
    &popcount_and_scalar,
    &popcount_xor_and_scalar,
    &and_into_scalar,
};

} // namespace

const KernelTable& detail::scalar_table() { return scalar; }

} // namespace tourn::kernels
