#include "filtra/set_family.hpp"

#include <algorithm>
#include <iterator>

#include "filtra/kernels.hpp"
#include "mask_set.hpp"

namespace filtra {

SetFamily::SetFamily(GroundSet ground, std::vector<std::uint64_t> masks) : ground_(ground), masks_(std::move(masks))
{
    const std::uint64_t full = ground_.full().bits();
    for (std::uint64_t m : masks_) {
        if ((m & ~full) != 0) {
            throw InputError("family member uses points outside ground of size " + std::to_string(ground_.size()));
        }
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

SetFamily::SetFamily(GroundSet ground, std::initializer_list<PointSet> sets)
    : SetFamily(ground, [&] {
          std::vector<std::uint64_t> v;
          for (PointSet s : sets) {
              v.push_back(s.bits());
          }
          return v;
      }())
{
}

SetFamily make_sorted_family(GroundSet ground, std::vector<std::uint64_t> masks)
{
    return SetFamily(ground, std::move(masks), SetFamily::Sorted{});
}

SetFamily SetFamily::power_set(GroundSet ground)
{
    if (ground.size() > 20) {
        throw InputError("power set requested for ground larger than 20 points");
    }
    std::vector<std::uint64_t> all(ground.subset_count());
    for (std::uint64_t m = 0; m < all.size(); ++m) {
        all[m] = m;
    }
    return make_sorted_family(ground, std::move(all));
}

bool SetFamily::contains(PointSet a) const
{
    return std::binary_search(masks_.begin(), masks_.end(), a.bits());
}

bool SetFamily::is_subfamily_of(const SetFamily& other) const
{
    return std::includes(other.masks_.begin(), other.masks_.end(), masks_.begin(), masks_.end());
}

SetFamily SetFamily::complements() const
{
    const std::uint64_t full = ground_.full().bits();
    // x -> X \ x = full - x is order-reversing on subsets of X
    std::vector<std::uint64_t> out(masks_.size());
    std::transform(masks_.rbegin(), masks_.rend(), out.begin(), [full](std::uint64_t m) { return full & ~m; });
    return make_sorted_family(ground_, std::move(out));
}

SetFamily SetFamily::united(const SetFamily& other) const
{
    ground_.require_same(other.ground_);
    std::vector<std::uint64_t> out;
    out.reserve(masks_.size() + other.masks_.size());
    std::set_union(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(), std::back_inserter(out));
    return make_sorted_family(ground_, std::move(out));
}

SetFamily SetFamily::common(const SetFamily& other) const
{
    ground_.require_same(other.ground_);
    std::vector<std::uint64_t> out;
    std::set_intersection(masks_.begin(), masks_.end(), other.masks_.begin(), other.masks_.end(),
                          std::back_inserter(out));
    return make_sorted_family(ground_, std::move(out));
}

SetFamily SetFamily::subsets_within(PointSet bound) const
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : masks_) {
        if ((m & ~bound.bits()) == 0) {
            out.push_back(m);
        }
    }
    return make_sorted_family(ground_, std::move(out));
}

namespace {

using BulkOp = void (*)(std::span<const std::uint64_t>, std::uint64_t, std::span<std::uint64_t>);

// Semi-naive closure: round k combines only the sets first reached in round
// k-1 with the seed, which yields exactly the combinations of <= k members.
SetFamily bounded_closure(const SetFamily& seed, std::uint64_t limit, BulkOp op)
{
    if (limit == 0) {
        throw InputError("subfamily cardinality bound must be >= 1");
    }
    detail::MaskSet seen(seed.ground().size());
    std::vector<std::uint64_t> frontier;
    for (std::uint64_t m : seed.masks()) {
        seen.insert(m);
        frontier.push_back(m);
    }
    std::vector<std::uint64_t> scratch(seed.size());
    for (std::uint64_t k = 2; k <= limit && !frontier.empty(); ++k) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t f : frontier) {
            op(seed.masks(), f, scratch);
            for (std::uint64_t c : scratch) {
                if (seen.insert(c)) {
                    next.push_back(c);
                }
            }
        }
        frontier = std::move(next);
    }
    return make_sorted_family(seed.ground(), seen.sorted());
}

} // namespace

SetFamily bounded_unions(const SetFamily& seed, std::uint64_t limit)
{
    return bounded_closure(seed, limit, kernels::active().or_each);
}

SetFamily bounded_intersections(const SetFamily& seed, std::uint64_t limit)
{
    return bounded_closure(seed, limit, kernels::active().and_each);
}

SetFamily union_closure(const SetFamily& seed)
{
    return bounded_unions(seed, ~std::uint64_t{0});
}

SetFamily intersection_closure(const SetFamily& seed)
{
    return bounded_intersections(seed, ~std::uint64_t{0});
}

SetFamily downward_closure(const SetFamily& seed)
{
    if (seed.ground().size() > 20) {
        throw InputError("downward closure requested for ground larger than 20 points");
    }
    detail::MaskSet seen(seed.ground().size());
    for (std::uint64_t m : seed.masks()) {
        // a mask already present was reached as a submask, so its subsets are too
        if (!seen.insert(m)) {
            continue;
        }
        for (std::uint64_t s = (m - 1) & m; s != m; s = (s - 1) & m) {
            seen.insert(s);
            if (s == 0) {
                break;
            }
        }
    }
    return make_sorted_family(seed.ground(), seen.sorted());
}

} // namespace filtra
