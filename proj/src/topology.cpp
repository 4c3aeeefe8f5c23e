#include "filtra/topology.hpp"

#include <algorithm>
#include <bit>

#include "filtra/kernels.hpp"
#include "mask_set.hpp"

namespace filtra {
namespace {

constexpr int kBitmapLimit = 6;

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// All unions of minimal neighbourhoods.  Breadth-first from ∅; every open
// set is reached by adding one neighbourhood at a time.
std::vector<std::uint64_t> opens_from_neighborhoods(GroundSet ground, std::span<const std::uint64_t> nbhds)
{
    detail::MaskSet seen(ground.size());
    std::vector<std::uint64_t> queue{0};
    seen.insert(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t cur = queue[head];
        for (std::uint64_t missing = ground.full().bits() & ~cur; missing != 0; missing &= missing - 1) {
            const std::uint64_t next = cur | nbhds[static_cast<std::size_t>(std::countr_zero(missing))];
            if (seen.insert(next)) {
                queue.push_back(next);
            }
        }
    }
    return seen.sorted();
}

} // namespace

Topology::Topology() : Topology(GroundSet{0}, make_sorted_family(GroundSet{0}, {0}), {}) {}

Topology::Topology(GroundSet ground, SetFamily opens, std::array<std::uint64_t, kMaxGround> nbhds)
    : ground_(ground), opens_(std::move(opens)), nbhds_(nbhds)
{
    if (ground_.size() <= kBitmapLimit) {
        has_bitmap_ = true;
        for (std::uint64_t m : opens_.masks()) {
            open_bitmap_ |= bit(static_cast<int>(m));
        }
    }
}

Topology generate_from_neighborhoods(GroundSet ground, std::span<const std::uint64_t> nbhds)
{
    std::array<std::uint64_t, kMaxGround> arr{};
    std::copy(nbhds.begin(), nbhds.end(), arr.begin());
    auto opens = make_sorted_family(ground, opens_from_neighborhoods(ground, nbhds));
    return Topology(ground, std::move(opens), arr);
}

Topology Topology::from_neighborhoods(GroundSet ground, std::span<const std::uint64_t> nbhds)
{
    const auto n = static_cast<std::size_t>(ground.size());
    if (nbhds.size() != n) {
        throw InputError("expected one neighbourhood per point");
    }
    for (std::size_t x = 0; x < n; ++x) {
        ground.require(PointSet{nbhds[x]});
        if (!((nbhds[x] >> x) & 1U)) {
            throw InputError("neighbourhood of point " + std::to_string(x) + " does not contain it");
        }
        for (std::uint64_t y = nbhds[x]; y != 0; y &= y - 1) {
            if ((nbhds[static_cast<std::size_t>(std::countr_zero(y))] & ~nbhds[x]) != 0) {
                throw InputError("neighbourhoods are not transitive at point " + std::to_string(x));
            }
        }
    }
    return generate_from_neighborhoods(ground, nbhds);
}

Topology Topology::from_opens(const SetFamily& opens)
{
    const GroundSet g = opens.ground();
    const std::uint64_t full = g.full().bits();
    if (!opens.contains(PointSet{0}) || !opens.contains(PointSet{full})) {
        throw InputError("open family must contain the empty set and the whole space");
    }
    const auto masks = opens.masks();
    for (std::size_t i = 0; i < masks.size(); ++i) {
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            if (!opens.contains(PointSet{masks[i] | masks[j]}) || !opens.contains(PointSet{masks[i] & masks[j]})) {
                throw InputError("open family is not closed under union and intersection");
            }
        }
    }
    std::array<std::uint64_t, kMaxGround> nbhds{};
    for (int x = 0; x < g.size(); ++x) {
        nbhds[static_cast<std::size_t>(x)] = kernels::intersection_of_supersets(masks, bit(x), full);
    }
    return Topology(g, opens, nbhds);
}

Topology Topology::discrete(int n)
{
    const GroundSet g{n};
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        nb[static_cast<std::size_t>(x)] = bit(x);
    }
    return generate_from_neighborhoods(g, nb);
}

Topology Topology::indiscrete(int n)
{
    const GroundSet g{n};
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n), g.full().bits());
    return generate_from_neighborhoods(g, nb);
}

Topology Topology::sierpinski()
{
    const std::uint64_t nb[] = {0b01, 0b11};
    return generate_from_neighborhoods(GroundSet{2}, nb);
}

bool Topology::is_open(PointSet a) const
{
    require(a);
    if (has_bitmap_) {
        return (open_bitmap_ >> a.bits()) & 1U;
    }
    return opens_.contains(a);
}

PointSet Topology::interior(PointSet a) const
{
    require(a);
    // x ∈ int(a) iff the minimal neighbourhood of x lies inside a
    return PointSet{kernels::subset_flags(neighborhoods(), a.bits())};
}

PointSet Topology::interior_by_opens(PointSet a) const
{
    require(a);
    return PointSet{kernels::union_of_subsets(opens_.masks(), a.bits())};
}

PointSet Topology::closure(PointSet a) const
{
    require(a);
    return ground_.complement(interior(ground_.complement(a)));
}

bool Topology::is_coarser_than(const Topology& other) const
{
    ground_.require_same(other.ground_);
    if (has_bitmap_ && other.has_bitmap_) {
        return (open_bitmap_ & ~other.open_bitmap_) == 0;
    }
    // σ ⊆ τ iff every τ-minimal neighbourhood is σ-saturated: N_τ(x) ⊆ N_σ(x)
    for (std::size_t x = 0; x < nbhd_count(); ++x) {
        if ((other.nbhds_[x] & ~nbhds_[x]) != 0) {
            return false;
        }
    }
    return true;
}

Topology generate_topology(GroundSet ground, const SetFamily& subbasis)
{
    ground.require_same(subbasis.ground());
    const std::uint64_t full = ground.full().bits();
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(ground.size()));
    for (int x = 0; x < ground.size(); ++x) {
        nb[static_cast<std::size_t>(x)] = kernels::intersection_of_supersets(subbasis.masks(), bit(x), full);
    }
    return generate_from_neighborhoods(ground, nb);
}

Topology join_topologies(std::span<const Topology> ts)
{
    if (ts.empty()) {
        throw InputError("join of an empty list of topologies");
    }
    const GroundSet g = ts.front().ground();
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(g.size()), g.full().bits());
    for (const Topology& t : ts) {
        g.require_same(t.ground());
        for (std::size_t x = 0; x < nb.size(); ++x) {
            nb[x] &= t.neighborhoods()[x];
        }
    }
    return generate_from_neighborhoods(g, nb);
}

SetFamily regular_opens(const Topology& t)
{
    std::vector<std::uint64_t> out;
    for (PointSet u : t.opens().sets()) {
        if (t.interior(t.closure(u)) == u) {
            out.push_back(u.bits());
        }
    }
    return make_sorted_family(t.ground(), std::move(out));
}

Topology semiregularization(const Topology& t)
{
    return generate_topology(t.ground(), regular_opens(t));
}

bool is_semiregular(const Topology& t)
{
    return semiregularization(t) == t;
}

bool is_pi_semiregular(const Topology& t)
{
    const SetFamily reg = regular_opens(t);
    const std::uint64_t full = t.ground().full().bits();
    for (std::uint64_t b : t.opens().masks()) {
        if (b != 0 && !kernels::any_subset_meeting(reg.masks(), b, full)) {
            return false;
        }
    }
    return true;
}

bool is_neighborhood_basis(const Topology& t, const SetFamily& fam)
{
    t.ground().require_same(fam.ground());
    for (int x = 0; x < t.ground().size(); ++x) {
        for (PointSet b : t.opens().sets()) {
            if (!b.contains(x)) {
                continue;
            }
            const bool found = std::ranges::any_of(fam.sets(), [&](PointSet a) {
                return a.subset_of(b) && t.interior(a).contains(x);
            });
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

bool is_neighborhood_pi_basis(const Topology& t, const SetFamily& fam)
{
    t.ground().require_same(fam.ground());
    for (PointSet b : t.opens().sets()) {
        if (b.empty()) {
            continue;
        }
        const bool found = std::ranges::any_of(fam.sets(), [&](PointSet a) {
            return a.subset_of(b) && !t.interior(a).empty();
        });
        if (!found) {
            return false;
        }
    }
    return true;
}

} // namespace filtra
