#include "tourn/kernels.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#define TOURN_HAVE_AVX2_PATH 1
#include <immintrin.h>
#else
#define TOURN_HAVE_AVX2_PATH 0
#endif

namespace tourn::kernels {

#if TOURN_HAVE_AVX2_PATH

namespace {

// Nibble-lookup popcount (Mula): per-byte counts via vpshufb, then
// horizontal byte sums into 64-bit lanes with vpsadbw.
__attribute__((target("avx2"))) inline __m256i popcount_lanes(__m256i v)
{
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                           _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline std::uint64_t horizontal_sum(__m256i acc)
{
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

__attribute__((target("avx2"))) inline __m256i load(const Word* p)
{
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

__attribute__((target("avx2"))) std::uint64_t popcount_avx2(std::span<const Word> a)
{
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, popcount_lanes(load(a.data() + i)));
    std::uint64_t total = horizontal_sum(acc);
    for (; i < n; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

__attribute__((target("avx2"))) std::uint64_t popcount_and_avx2(std::span<const Word> a,
                                                                std::span<const Word> b)
{
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(
            acc, popcount_lanes(_mm256_and_si256(load(a.data() + i), load(b.data() + i))));
    std::uint64_t total = horizontal_sum(acc);
    for (; i < n; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

__attribute__((target("avx2"))) std::uint64_t popcount_xor_and_avx2(std::span<const Word> a,
                                                                    std::span<const Word> b,
                                                                    std::span<const Word> mask)
{
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(x, load(mask.data() + i))));
    }
    std::uint64_t total = horizontal_sum(acc);
    for (; i < n; ++i)
        total += static_cast<std::uint64_t>(std::popcount((a[i] ^ b[i]) & mask[i]));
    return total;
}

__attribute__((target("avx2"))) void and_into_avx2(std::span<Word> dst, std::span<const Word> src,
                                                   bool complement)
{
    const std::size_t n = dst.size();
    std::size_t i = 0;
    if (complement) {
        for (; i + 4 <= n; i += 4) {
            // andnot computes ~src & dst
            const __m256i r = _mm256_andnot_si256(load(src.data() + i), load(dst.data() + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), r);
        }
        for (; i < n; ++i)
            dst[i] &= ~src[i];
    }
    else {
        for (; i + 4 <= n; i += 4) {
            const __m256i r = _mm256_and_si256(load(src.data() + i), load(dst.data() + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), r);
        }
        for (; i < n; ++i)
            dst[i] &= src[i];
    }
}

constexpr KernelTable avx2{
    Backend::avx2,
    &popcount_avx2,
    &popcount_and_avx2,
    &popcount_xor_and_avx2,
    &and_into_avx2,
};

} // namespace

const KernelTable* detail::avx2_table() { return &avx2; }

bool detail::cpu_has_avx2()
{
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}

#else

const KernelTable* detail::avx2_table() { return nullptr; }
bool detail::cpu_has_avx2() { return false; }

#endif

} // namespace tourn::kernels
