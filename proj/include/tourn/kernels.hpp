#pragma once

// Word-level kernels over packed bit rows.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The variant is
// chosen once at runtime from the CPU features; all variants must produce
// identical results, which tests/unit/test_kernels.cpp checks.
//
// All spans passed to one call must have the same length.

#include <cstdint>
#include <span>
#include <string_view>

namespace tourn::kernels {

using Word = std::uint64_t;

enum class Backend { scalar, avx2, neon };

struct KernelTable {
    Backend backend;
    std::uint64_t (*popcount)(std::span<const Word> a);
    std::uint64_t (*popcount_and)(std::span<const Word> a, std::span<const Word> b);
    // popcount((a ^ b) & mask)
    std::uint64_t (*popcount_xor_and)(std::span<const Word> a, std::span<const Word> b,
                                      std::span<const Word> mask);
    // dst &= complement ? ~src : src
    void (*and_into)(std::span<Word> dst, std::span<const Word> src, bool complement);
};

bool available(Backend backend);

// Throws std::invalid_argument if the backend is not available on this CPU.
const KernelTable& table(Backend backend);

// The fastest available table; selected on first use.
const KernelTable& best();

std::string_view name(Backend backend);

inline std::uint64_t popcount(std::span<const Word> a) { return best().popcount(a); }

inline std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b)
{
    return best().popcount_and(a, b);
}

inline std::uint64_t popcount_xor_and(std::span<const Word> a, std::span<const Word> b,
                                      std::span<const Word> mask)
{
    return best().popcount_xor_and(a, b, mask);
}

inline void and_into(std::span<Word> dst, std::span<const Word> src, bool complement = false)
{
    best().and_into(dst, src, complement);
}

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();   // nullptr when not compiled in
const KernelTable* neon_table();   // nullptr when not compiled in
bool cpu_has_avx2();
}

} // namespace tourn::kernels
