// Compiled with -mavx2; only reached after a CPUID check in dispatch.cpp.

#include "kernels/kernels_internal.hpp"

#include <immintrin.h>

#include <cstddef>

namespace filtra::kernels::detail {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

// All-ones lanes where (m & ~bound) == 0.
inline __m256i subset_lanes(__m256i m, __m256i bound)
{
    return _mm256_cmpeq_epi64(_mm256_andnot_si256(bound, m), _mm256_setzero_si256());
}

inline std::uint64_t horizontal_or(__m256i v)
{
    __m128i x = _mm_or_si128(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(x)) |
           static_cast<std::uint64_t>(_mm_extract_epi64(x, 1));
}

inline std::uint64_t horizontal_and(__m256i v)
{
    __m128i x = _mm_and_si128(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(x)) &
           static_cast<std::uint64_t>(_mm_extract_epi64(x, 1));
}

std::uint64_t union_of_subsets(std::span<const std::uint64_t> masks, std::uint64_t bound)
{
    const __m256i vb = _mm256_set1_epi64x(static_cast<long long>(bound));
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLanes <= masks.size(); i += kLanes) {
        __m256i m = load(masks.data() + i);
        acc = _mm256_or_si256(acc, _mm256_and_si256(m, subset_lanes(m, vb)));
    }
    std::uint64_t r = horizontal_or(acc);
    for (; i < masks.size(); ++i) {
        if ((masks[i] & ~bound) == 0) {
            r |= masks[i];
        }
    }
    return r;
}

std::uint64_t intersection_of_supersets(std::span<const std::uint64_t> masks, std::uint64_t required,
                                        std::uint64_t init)
{
    const __m256i vr = _mm256_set1_epi64x(static_cast<long long>(required));
    const __m256i ones = _mm256_set1_epi64x(-1);
    __m256i acc = ones;
    std::size_t i = 0;
    for (; i + kLanes <= masks.size(); i += kLanes) {
        __m256i m = load(masks.data() + i);
        // required ⊆ m  <=>  (required & ~m) == 0
        __m256i hit = _mm256_cmpeq_epi64(_mm256_andnot_si256(m, vr), _mm256_setzero_si256());
        // lanes that miss contribute all-ones
        acc = _mm256_and_si256(acc, _mm256_or_si256(m, _mm256_andnot_si256(hit, ones)));
    }
    std::uint64_t r = init & horizontal_and(acc);
    for (; i < masks.size(); ++i) {
        if ((required & ~masks[i]) == 0) {
            r &= masks[i];
        }
    }
    return r;
}

std::uint64_t subset_flags(std::span<const std::uint64_t> masks, std::uint64_t bound)
{
    const __m256i vb = _mm256_set1_epi64x(static_cast<long long>(bound));
    std::uint64_t flags = 0;
    std::size_t i = 0;
    for (; i + kLanes <= masks.size(); i += kLanes) {
        __m256i hit = subset_lanes(load(masks.data() + i), vb);
        auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(hit)));
        flags |= bits << i;
    }
    for (; i < masks.size(); ++i) {
        if ((masks[i] & ~bound) == 0) {
            flags |= std::uint64_t{1} << i;
        }
    }
    return flags;
}

void or_each(std::span<const std::uint64_t> masks, std::uint64_t x, std::span<std::uint64_t> out)
{
    const __m256i vx = _mm256_set1_epi64x(static_cast<long long>(x));
    std::size_t i = 0;
    for (; i + kLanes <= masks.size(); i += kLanes) {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_or_si256(load(masks.data() + i), vx));
    }
    for (; i < masks.size(); ++i) {
        out[i] = masks[i] | x;
    }
}

void and_each(std::span<const std::uint64_t> masks, std::uint64_t x, std::span<std::uint64_t> out)
{
    const __m256i vx = _mm256_set1_epi64x(static_cast<long long>(x));
    std::size_t i = 0;
    for (; i + kLanes <= masks.size(); i += kLanes) {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), _mm256_and_si256(load(masks.data() + i), vx));
    }
    for (; i < masks.size(); ++i) {
        out[i] = masks[i] & x;
    }
}

bool any_subset_meeting(std::span<const std::uint64_t> masks, std::uint64_t bound, std::uint64_t probe)
{
    const __m256i vb = _mm256_set1_epi64x(static_cast<long long>(bound));
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(probe));
    std::size_t i = 0;
    for (; i + kLanes <= masks.size(); i += kLanes) {
        __m256i m = load(masks.data() + i);
        __m256i hit = _mm256_and_si256(subset_lanes(m, vb), _mm256_and_si256(m, vp));
        if (!_mm256_testz_si256(hit, hit)) {
            return true;
        }
    }
    for (; i < masks.size(); ++i) {
        if ((masks[i] & ~bound) == 0 && (masks[i] & probe) != 0) {
            return true;
        }
    }
    return false;
}

} // namespace

const KernelTable& avx2_table()
{
    static const KernelTable t{union_of_subsets, intersection_of_supersets, subset_flags,
                               or_each,          and_each,                  any_subset_meeting};
    return t;
}

} // namespace filtra::kernels::detail
