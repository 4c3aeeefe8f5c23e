#pragma once

// Bulk bitmask kernels over arrays of 64-bit subset masks.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant.  The variant is chosen once at startup from CPUID; setting
// FILTRA_FORCE_SCALAR=1 in the environment pins the scalar table.  Both tables
// are always reachable through table(Isa) so tests can compare them directly.

#include <cstdint>
#include <span>
#include <string_view>

namespace filtra::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    /// OR of all masks m with m ⊆ bound.
    std::uint64_t (*union_of_subsets)(std::span<const std::uint64_t> masks, std::uint64_t bound);
    /// AND of `init` with every mask m ⊇ required.
    std::uint64_t (*intersection_of_supersets)(std::span<const std::uint64_t> masks, std::uint64_t required,
                                               std::uint64_t init);
    /// Bit i of the result is set iff masks[i] ⊆ bound.  masks.size() <= 64.
    std::uint64_t (*subset_flags)(std::span<const std::uint64_t> masks, std::uint64_t bound);
    /// out[i] = masks[i] | x.
    void (*or_each)(std::span<const std::uint64_t> masks, std::uint64_t x, std::span<std::uint64_t> out);
    /// out[i] = masks[i] & x.
    void (*and_each)(std::span<const std::uint64_t> masks, std::uint64_t x, std::span<std::uint64_t> out);
    /// True iff some mask m satisfies m ⊆ bound and m ∩ probe ≠ ∅.
    bool (*any_subset_meeting)(std::span<const std::uint64_t> masks, std::uint64_t bound, std::uint64_t probe);
};

bool isa_available(Isa isa);
const KernelTable& table(Isa isa);
Isa active_isa();
const KernelTable& active();
std::string_view isa_name(Isa isa);

inline std::uint64_t union_of_subsets(std::span<const std::uint64_t> masks, std::uint64_t bound)
{
    return active().union_of_subsets(masks, bound);
}
inline std::uint64_t intersection_of_supersets(std::span<const std::uint64_t> masks, std::uint64_t required,
                                               std::uint64_t init)
{
    return active().intersection_of_supersets(masks, required, init);
}
inline std::uint64_t subset_flags(std::span<const std::uint64_t> masks, std::uint64_t bound)
{
    return active().subset_flags(masks, bound);
}
inline void or_each(std::span<const std::uint64_t> masks, std::uint64_t x, std::span<std::uint64_t> out)
{
    active().or_each(masks, x, out);
}
inline void and_each(std::span<const std::uint64_t> masks, std::uint64_t x, std::span<std::uint64_t> out)
{
    active().and_each(masks, x, out);
}
inline bool any_subset_meeting(std::span<const std::uint64_t> masks, std::uint64_t bound, std::uint64_t probe)
{
    return active().any_subset_meeting(masks, bound, probe);
}

} // namespace filtra::kernels
