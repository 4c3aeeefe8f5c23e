#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "filtra/baire.hpp"
#include "filtra/set_family.hpp"
#include "filtra/topology.hpp"

namespace filtra {

/// (ν, ξ) with ν ≥ 1 a finite cardinal and ξ < ν⁺, i.e. ξ ≤ ν.
class LevelIndex {
public:
    LevelIndex(std::uint64_t nu, std::uint64_t xi);
    std::uint64_t nu() const { return nu_; }
    std::uint64_t xi() const { return xi_; }
    auto operator<=>(const LevelIndex&) const = default;

private:
    std::uint64_t nu_;
    std::uint64_t xi_;
};

/// Least family containing the closed sets and closed under complements and
/// unions of at most ν members.
SetFamily bor(const Topology& t, std::uint64_t nu);

/// P^ν_0 = closed sets; P^ν_ξ = intersections of ≤ ν complements of sets in
/// ⋃_{γ<ξ} P^ν_γ.
SetFamily p_level(const Topology& t, LevelIndex idx);
/// S^ν_0 = open sets; S^ν_ξ = unions of ≤ ν complements of sets in ⋃_{γ<ξ} S^ν_γ.
SetFamily s_level(const Topology& t, LevelIndex idx);
/// P^ν_0, ..., P^ν_{xi_max} in one pass.  xi_max may exceed ν; levels past ν
/// are then the ones the recursion would produce and are not P^ν_ξ proper.
std::vector<SetFamily> p_levels(const Topology& t, std::uint64_t nu, std::uint64_t xi_max);
std::vector<SetFamily> s_levels(const Topology& t, std::uint64_t nu, std::uint64_t xi_max);

/// A ν beyond which P^ν_ξ and S^ν_ξ no longer change: max(ξ, 2^n), saturating.
std::uint64_t saturating_nu(GroundSet ground, std::uint64_t xi);

// Classes are indexed by ξ (0-based): pi_class(t, ξ) is the class written
// Π^{ω,0}_{1+ξ}, so pi_class(t, 0) is the family of closed sets.

/// Π^{ω,0}_{1+ξ} = ⋃_ν P^ν_ξ, evaluated at the saturating ν.
SetFamily pi_class(const Topology& t, std::uint64_t xi);
/// Σ^{ω,0}_{1+ξ} = ⋃_ν S^ν_ξ, evaluated at the saturating ν.
SetFamily sigma_class(const Topology& t, std::uint64_t xi);
/// κ-Borel sets; for κ = ω this is the algebra generated by the open sets.
SetFamily kappa_borel(const Topology& t, Kappa k = Kappa::omega());

struct HierarchyOptions {
    /// Also materialize classes up to this ξ even past stabilization.
    std::uint64_t xi_max = 0;
    /// ν values for which P^ν_ξ / S^ν_ξ (ξ ≤ ν) are kept.
    std::vector<std::uint64_t> level_nus{};
};

/// The Π/Σ hierarchy over one base topology, computed until it stabilizes.
class HierarchySnapshot {
public:
    static HierarchySnapshot build(const Topology& base, const HierarchyOptions& opts = {});

    const Topology& base_topology() const { return base_; }
    /// Least ξ* with pi_class(ξ) = pi_class(ξ*) and sigma_class(ξ) = sigma_class(ξ*) for all ξ ≥ ξ*.
    std::uint64_t stabilization() const { return stabilization_; }
    const SetFamily& pi_class(std::uint64_t xi) const;
    const SetFamily& sigma_class(std::uint64_t xi) const;
    /// ⋃_{ξ<α} pi_class(ξ), α ≥ 1.
    SetFamily pi_union_below(std::uint64_t alpha) const;
    SetFamily sigma_union_below(std::uint64_t alpha) const;
    const SetFamily& borel() const { return borel_; }
    /// Throws InputError when ν was not requested in HierarchyOptions.
    const SetFamily& p_level(LevelIndex idx) const;
    const SetFamily& s_level(LevelIndex idx) const;
    std::size_t materialized_classes() const { return pi_.size(); }

private:
    Topology base_;
    std::vector<SetFamily> pi_;
    std::vector<SetFamily> sigma_;
    std::uint64_t stabilization_ = 0;
    SetFamily borel_;
    std::map<std::uint64_t, std::vector<SetFamily>> p_levels_;
    std::map<std::uint64_t, std::vector<SetFamily>> s_levels_;
};

/// Least α ≥ 1 such that ⋃_{ξ<α} Π^{ω,0}_{1+ξ}(σ) contains a neighbourhood
/// basis of τ; nullopt when even the whole Borel algebra does not.
std::optional<std::uint64_t> min_pi_basis_level(const Topology& sigma, const Topology& tau);
std::optional<std::uint64_t> min_pi_basis_level(const HierarchySnapshot& sigma, const Topology& tau);
/// Same with neighbourhood π-bases and Σ classes.
std::optional<std::uint64_t> min_sigma_pibasis_level(const Topology& sigma, const Topology& tau);
std::optional<std::uint64_t> min_sigma_pibasis_level(const HierarchySnapshot& sigma, const Topology& tau);

} // namespace filtra
