#include "filtra/borel.hpp"

#include <algorithm>
#include <string>

namespace filtra {

LevelIndex::LevelIndex(std::uint64_t nu, std::uint64_t xi) : nu_(nu), xi_(xi)
{
    if (nu == 0) {
        throw InputError("level index needs nu >= 1");
    }
    if (xi > nu) {
        throw InputError("level index xi=" + std::to_string(xi) + " outside nu+ for nu=" + std::to_string(nu));
    }
}

SetFamily bor(const Topology& t, std::uint64_t nu)
{
    if (nu == 0) {
        throw InputError("bor needs nu >= 1");
    }
    SetFamily fam = t.closed_sets();
    for (;;) {
        SetFamily next = bounded_unions(fam.united(fam.complements()), nu);
        if (next == fam) {
            return fam;
        }
        fam = std::move(next);
    }
}

namespace {

enum class Side { pi, sigma };

std::vector<SetFamily> levels(const Topology& t, std::uint64_t nu, std::uint64_t xi_max, Side side)
{
    if (nu == 0) {
        throw InputError("hierarchy levels need nu >= 1");
    }
    std::vector<SetFamily> out;
    out.reserve(xi_max + 1);
    out.push_back(side == Side::pi ? t.closed_sets() : t.opens());
    SetFamily below = out.front();
    for (std::uint64_t xi = 1; xi <= xi_max; ++xi) {
        SetFamily comps = below.complements();
        SetFamily level = side == Side::pi ? bounded_intersections(comps, nu) : bounded_unions(comps, nu);
        below = below.united(level);
        out.push_back(std::move(level));
    }
    return out;
}

// Classes until two consecutive ones agree; at that point the union of all
// earlier classes stops growing, so every later class repeats.
std::vector<SetFamily> classes_until_stable(const Topology& t, Side side, std::uint64_t xi_max)
{
    const std::uint64_t nu = saturating_nu(t.ground(), 0);
    std::vector<SetFamily> out{side == Side::pi ? t.closed_sets() : t.opens()};
    SetFamily below = out.front();
    for (;;) {
        SetFamily comps = below.complements();
        SetFamily next = side == Side::pi ? bounded_intersections(comps, nu) : bounded_unions(comps, nu);
        const bool repeated = next == out.back();
        if (repeated && out.size() > xi_max) {
            return out;
        }
        below = below.united(next);
        out.push_back(std::move(next));
    }
}

// index of the first class that repeats forever
std::uint64_t first_stable(const std::vector<SetFamily>& classes)
{
    std::uint64_t k = classes.size() - 1;
    while (k > 0 && classes[k - 1] == classes[k]) {
        --k;
    }
    return k;
}

} // namespace

std::vector<SetFamily> p_levels(const Topology& t, std::uint64_t nu, std::uint64_t xi_max)
{
    return levels(t, nu, xi_max, Side::pi);
}

std::vector<SetFamily> s_levels(const Topology& t, std::uint64_t nu, std::uint64_t xi_max)
{
    return levels(t, nu, xi_max, Side::sigma);
}

SetFamily p_level(const Topology& t, LevelIndex idx)
{
    return std::move(p_levels(t, idx.nu(), idx.xi()).back());
}

SetFamily s_level(const Topology& t, LevelIndex idx)
{
    return std::move(s_levels(t, idx.nu(), idx.xi()).back());
}

std::uint64_t saturating_nu(GroundSet ground, std::uint64_t xi)
{
    return std::max(xi, ground.subset_count());
}

SetFamily pi_class(const Topology& t, std::uint64_t xi)
{
    return p_level(t, LevelIndex{saturating_nu(t.ground(), xi), xi});
}

SetFamily sigma_class(const Topology& t, std::uint64_t xi)
{
    return s_level(t, LevelIndex{saturating_nu(t.ground(), xi), xi});
}

SetFamily kappa_borel(const Topology& t, Kappa)
{
    // bor(ν) grows with ν and is constant once ν reaches the number of subsets
    return bor(t, saturating_nu(t.ground(), 0));
}

HierarchySnapshot HierarchySnapshot::build(const Topology& base, const HierarchyOptions& opts)
{
    HierarchySnapshot s;
    s.base_ = base;
    s.pi_ = classes_until_stable(base, Side::pi, opts.xi_max);
    s.sigma_ = classes_until_stable(base, Side::sigma, opts.xi_max);
    s.stabilization_ = std::max(first_stable(s.pi_), first_stable(s.sigma_));
    const std::size_t len = std::max(s.pi_.size(), s.sigma_.size());
    s.pi_.resize(len, s.pi_.back());
    s.sigma_.resize(len, s.sigma_.back());
    s.borel_ = kappa_borel(base);
    for (std::uint64_t nu : opts.level_nus) {
        s.p_levels_[nu] = p_levels(base, nu, nu);
        s.s_levels_[nu] = s_levels(base, nu, nu);
    }
    return s;
}

const SetFamily& HierarchySnapshot::pi_class(std::uint64_t xi) const
{
    return pi_[std::min<std::uint64_t>(xi, pi_.size() - 1)];
}

const SetFamily& HierarchySnapshot::sigma_class(std::uint64_t xi) const
{
    return sigma_[std::min<std::uint64_t>(xi, sigma_.size() - 1)];
}

SetFamily HierarchySnapshot::pi_union_below(std::uint64_t alpha) const
{
    SetFamily acc(base_.ground());
    for (std::uint64_t xi = 0; xi < alpha && xi < pi_.size(); ++xi) {
        acc = acc.united(pi_[xi]);
    }
    return acc;
}

SetFamily HierarchySnapshot::sigma_union_below(std::uint64_t alpha) const
{
    SetFamily acc(base_.ground());
    for (std::uint64_t xi = 0; xi < alpha && xi < sigma_.size(); ++xi) {
        acc = acc.united(sigma_[xi]);
    }
    return acc;
}

const SetFamily& HierarchySnapshot::p_level(LevelIndex idx) const
{
    auto it = p_levels_.find(idx.nu());
    if (it == p_levels_.end()) {
        throw InputError("snapshot holds no levels for nu=" + std::to_string(idx.nu()));
    }
    return it->second[idx.xi()];
}

const SetFamily& HierarchySnapshot::s_level(LevelIndex idx) const
{
    auto it = s_levels_.find(idx.nu());
    if (it == s_levels_.end()) {
        throw InputError("snapshot holds no levels for nu=" + std::to_string(idx.nu()));
    }
    return it->second[idx.xi()];
}

namespace {

template <class UnionBelow, class IsBasis>
std::optional<std::uint64_t> min_level(const HierarchySnapshot& sigma, const Topology& tau, UnionBelow union_below,
                                       IsBasis is_basis)
{
    if (!sigma.base_topology().is_coarser_than(tau)) {
        throw InputError("sigma is not coarser than tau");
    }
    for (std::uint64_t alpha = 1; alpha <= sigma.stabilization() + 1; ++alpha) {
        if (is_basis(tau, union_below(alpha))) {
            return alpha;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::uint64_t> min_pi_basis_level(const HierarchySnapshot& sigma, const Topology& tau)
{
    return min_level(
        sigma, tau, [&](std::uint64_t a) { return sigma.pi_union_below(a); }, is_neighborhood_basis);
}

std::optional<std::uint64_t> min_pi_basis_level(const Topology& sigma, const Topology& tau)
{
    return min_pi_basis_level(HierarchySnapshot::build(sigma), tau);
}

std::optional<std::uint64_t> min_sigma_pibasis_level(const HierarchySnapshot& sigma, const Topology& tau)
{
    return min_level(
        sigma, tau, [&](std::uint64_t a) { return sigma.sigma_union_below(a); }, is_neighborhood_pi_basis);
}

std::optional<std::uint64_t> min_sigma_pibasis_level(const Topology& sigma, const Topology& tau)
{
    return min_sigma_pibasis_level(HierarchySnapshot::build(sigma), tau);
}

} // namespace filtra
