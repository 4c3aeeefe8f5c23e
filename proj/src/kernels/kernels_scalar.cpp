#include "kernels/kernels_internal.hpp"

#include <cstddef>

namespace filtra::kernels::detail {
namespace {

std::uint64_t union_of_subsets(std::span<const std::uint64_t> masks, std::uint64_t bound)
{
    std::uint64_t acc = 0;
    for (std::uint64_t m : masks) {
        if ((m & ~bound) == 0) {
            acc |= m;
        }
    }
    return acc;
}

std::uint64_t intersection_of_supersets(std::span<const std::uint64_t> masks, std::uint64_t required,
                                        std::uint64_t init)
{
    std::uint64_t acc = init;
    for (std::uint64_t m : masks) {
        if ((required & ~m) == 0) {
            acc &= m;
        }
    }
    return acc;
}

std::uint64_t subset_flags(std::span<const std::uint64_t> masks, std::uint64_t bound)
{
    std::uint64_t flags = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if ((masks[i] & ~bound) == 0) {
            flags |= std::uint64_t{1} << i;
        }
    }
    return flags;
}

void or_each(std::span<const std::uint64_t> masks, std::uint64_t x, std::span<std::uint64_t> out)
{
    for (std::size_t i = 0; i < masks.size(); ++i) {
        out[i] = masks[i] | x;
    }
}

void and_each(std::span<const std::uint64_t> masks, std::uint64_t x, std::span<std::uint64_t> out)
{
    for (std::size_t i = 0; i < masks.size(); ++i) {
        out[i] = masks[i] & x;
    }
}

bool any_subset_meeting(std::span<const std::uint64_t> masks, std::uint64_t bound, std::uint64_t probe)
{
    for (std::uint64_t m : masks) {
        if ((m & ~bound) == 0 && (m & probe) != 0) {
            return true;
        }
    }
    return false;
}

} // namespace

const KernelTable& scalar_table()
{
    static const KernelTable t{union_of_subsets, intersection_of_supersets, subset_flags,
                               or_each,          and_each,                  any_subset_meeting};
    return t;
}

} // namespace filtra::kernels::detail
