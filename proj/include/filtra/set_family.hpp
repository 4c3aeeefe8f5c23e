#pragma once

#include <cstdint>
#include <ranges>
#include <span>
#include <vector>

#include "filtra/point_set.hpp"

namespace filtra {

/// Finite family of subsets of a ground set, kept sorted ascending by mask
/// with no duplicates, so equality is sequence equality.
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(GroundSet ground) : ground_(ground) {}
    /// Sorts and deduplicates; throws InputError for members outside the ground.
    SetFamily(GroundSet ground, std::vector<std::uint64_t> masks);
    SetFamily(GroundSet ground, std::initializer_list<PointSet> sets);

    /// Every subset of X.  Requires n <= 20.
    static SetFamily power_set(GroundSet ground);

    GroundSet ground() const { return ground_; }
    std::span<const std::uint64_t> masks() const& { return masks_; }
    // views into a temporary would dangle (e.g. in a range-for header)
    std::span<const std::uint64_t> masks() && = delete;
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    PointSet operator[](std::size_t i) const { return PointSet{masks_[i]}; }
    auto sets() && = delete;
    auto sets() const&
    {
        return masks_ | std::views::transform([](std::uint64_t m) { return PointSet{m}; });
    }

    bool contains(PointSet a) const;
    /// ⊆ on families.
    bool is_subfamily_of(const SetFamily& other) const;
    SetFamily complements() const;
    /// Family union.
    SetFamily united(const SetFamily& other) const;
    /// Family intersection.
    SetFamily common(const SetFamily& other) const;
    /// Members that are subsets of `bound`.
    SetFamily subsets_within(PointSet bound) const;

    bool operator==(const SetFamily& other) const = default;

private:
    struct Sorted {};
    SetFamily(GroundSet ground, std::vector<std::uint64_t> masks, Sorted) : ground_(ground), masks_(std::move(masks)) {}
    friend SetFamily make_sorted_family(GroundSet, std::vector<std::uint64_t>);

    GroundSet ground_;
    std::vector<std::uint64_t> masks_;
};

/// Wraps masks already sorted ascending and unique; no validation.
SetFamily make_sorted_family(GroundSet ground, std::vector<std::uint64_t> masks);

/// Least family containing `seed` and closed under pairwise union.
SetFamily union_closure(const SetFamily& seed);
/// Least family containing `seed` and closed under pairwise intersection.
SetFamily intersection_closure(const SetFamily& seed);
/// All unions of at most `limit` members of `seed` (limit >= 1).  The union of
/// the empty subfamily is not added.
SetFamily bounded_unions(const SetFamily& seed, std::uint64_t limit);
/// All intersections of at most `limit` members of `seed` (limit >= 1).
SetFamily bounded_intersections(const SetFamily& seed, std::uint64_t limit);
/// All subsets of members.  Requires n <= 20.
SetFamily downward_closure(const SetFamily& seed);

} // namespace filtra
