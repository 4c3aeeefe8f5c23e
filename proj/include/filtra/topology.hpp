#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "filtra/point_set.hpp"
#include "filtra/set_family.hpp"

namespace filtra {

/// A topology on a finite ground set, held as its canonical (ascending,
/// duplicate-free) family of open sets together with the minimal open
/// neighbourhood of every point.  Immutable after construction.
class Topology {
public:
    /// Indiscrete topology on the empty ground set.
    Topology();

    /// Validates that `opens` contains ∅ and X and is closed under pairwise
    /// union and intersection; throws InputError otherwise.
    static Topology from_opens(const SetFamily& opens);
    /// Topology whose minimal neighbourhoods are `nbhds` (nbhds[x] ∋ x and
    /// y ∈ nbhds[x] ⇒ nbhds[y] ⊆ nbhds[x]); throws InputError otherwise.
    static Topology from_neighborhoods(GroundSet ground, std::span<const std::uint64_t> nbhds);

    static Topology discrete(int n);
    static Topology indiscrete(int n);
    /// {∅, {0}, {0,1}} on two points.
    static Topology sierpinski();

    GroundSet ground() const { return ground_; }
    const SetFamily& opens() const { return opens_; }
    std::span<const std::uint64_t> neighborhoods() const { return std::span(nbhds_.data(), nbhd_count()); }
    /// Smallest open set containing `point`.
    PointSet neighborhood(int point) const { return PointSet{nbhds_[static_cast<std::size_t>(point)]}; }

    bool is_open(PointSet a) const;
    bool is_closed(PointSet a) const { return is_open(ground_.complement(a)); }
    /// Largest open subset of `a`.
    PointSet interior(PointSet a) const;
    /// Union of all opens contained in `a`, evaluated literally over opens().
    PointSet interior_by_opens(PointSet a) const;
    PointSet closure(PointSet a) const;
    SetFamily closed_sets() const { return opens_.complements(); }

    /// this ⊆ other as families of open sets.
    bool is_coarser_than(const Topology& other) const;

    bool operator==(const Topology& other) const { return opens_ == other.opens_; }

private:
    Topology(GroundSet ground, SetFamily opens, std::array<std::uint64_t, kMaxGround> nbhds);
    std::size_t nbhd_count() const { return static_cast<std::size_t>(ground_.size()); }
    void require(PointSet a) const { ground_.require(a); }

    GroundSet ground_;
    SetFamily opens_;
    std::array<std::uint64_t, kMaxGround> nbhds_{};
    // bit m set iff subset m is open; maintained for n <= 6
    std::uint64_t open_bitmap_ = 0;
    bool has_bitmap_ = false;

    friend Topology generate_from_neighborhoods(GroundSet, std::span<const std::uint64_t>);
};

/// Smallest topology on `ground` containing every member of `subbasis`.
Topology generate_topology(GroundSet ground, const SetFamily& subbasis);
/// ⋁ of a nonempty list of topologies on a shared ground.
Topology join_topologies(std::span<const Topology> ts);
/// Open sets U with int(cl(U)) = U.
SetFamily regular_opens(const Topology& t);
/// Topology generated by the regular open sets.
Topology semiregularization(const Topology& t);
bool is_semiregular(const Topology& t);
/// Every nonempty open set contains a nonempty regular open set.
bool is_pi_semiregular(const Topology& t);
/// ∀x ∀ open B ∋ x ∃ A ∈ fam: x ∈ int(A) ∧ A ⊆ B.
bool is_neighborhood_basis(const Topology& t, const SetFamily& fam);
/// ∀ nonempty open B ∃ A ∈ fam: int(A) ≠ ∅ ∧ A ⊆ B.
bool is_neighborhood_pi_basis(const Topology& t, const SetFamily& fam);

} // namespace filtra
