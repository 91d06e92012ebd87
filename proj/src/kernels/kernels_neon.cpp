#include "tourn/kernels.hpp"

#include <bit>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace tourn::kernels {

#if defined(__aarch64__)

namespace {

inline std::uint64_t lane_count(uint64x2_t v)
{
    return vaddlvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::uint64_t popcount_neon(std::span<const Word> a)
{
    std::size_t i = 0;
    std::uint64_t total = 0;
    for (; i + 2 <= a.size(); i += 2)
        total += lane_count(vld1q_u64(a.data() + i));
    for (; i < a.size(); ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

std::uint64_t popcount_and_neon(std::span<const Word> a, std::span<const Word> b)
{
    std::size_t i = 0;
    std::uint64_t total = 0;
    for (; i + 2 <= a.size(); i += 2)
        total += lane_count(vandq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)));
    for (; i < a.size(); ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::uint64_t popcount_xor_and_neon(std::span<const Word> a, std::span<const Word> b,
                                    std::span<const Word> mask)
{
    std::size_t i = 0;
    std::uint64_t total = 0;
    for (; i + 2 <= a.size(); i += 2) {
        const uint64x2_t x = veorq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i));
        total += lane_count(vandq_u64(x, vld1q_u64(mask.data() + i)));
    }
    for (; i < a.size(); ++i)
        total += static_cast<std::uint64_t>(std::popcount((a[i] ^ b[i]) & mask[i]));
    return total;
}

void and_into_neon(std::span<Word> dst, std::span<const Word> src, bool complement)
{
    std::size_t i = 0;
    for (; i + 2 <= dst.size(); i += 2) {
        const uint64x2_t s = vld1q_u64(src.data() + i);
        const uint64x2_t d = vld1q_u64(dst.data() + i);
        vst1q_u64(dst.data() + i, complement ? vbicq_u64(d, s) : vandq_u64(d, s));
    }
    for (; i < dst.size(); ++i)
        dst[i] &= complement ? ~src[i] : src[i];
}

constexpr KernelTable neon{
    Backend::neon,
    &popcount_neon,
    &popcount_and_neon,
    &popcount_xor_and_neon,
    &and_into_neon,
};

} // namespace

const KernelTable* detail::neon_table() { return &neon; }

#else

const KernelTable* detail::neon_table() { return nullptr; }

#endif

} // namespace tourn::kernels
