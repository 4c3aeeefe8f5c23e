#pragma once

#include <filtra/enumerate.hpp>
#include <filtra/topology.hpp>

#include "oracles.hpp"

namespace testing {

inline oracle::Family fam(const filtra::SetFamily& f)
{
    return oracle::Family(f.masks().begin(), f.masks().end());
}

inline oracle::Family opens(const filtra::Topology& t) { return fam(t.opens()); }

inline filtra::SetFamily family(int n, const oracle::Family& f)
{
    return filtra::SetFamily(filtra::GroundSet{n}, std::vector<std::uint64_t>(f.begin(), f.end()));
}

inline filtra::Topology topo(int n, std::initializer_list<std::uint64_t> masks)
{
    return filtra::Topology::from_opens(filtra::SetFamily(filtra::GroundSet{n}, std::vector<std::uint64_t>(masks)));
}

inline filtra::PointSet ps(std::uint64_t m) { return filtra::PointSet{m}; }

/// Topologies on n points, cached per n.
inline const std::vector<filtra::Topology>& all_topologies(int n)
{
    static std::vector<std::vector<filtra::Topology>> cache(filtra::kMaxExhaustive + 1);
    static std::vector<bool> done(filtra::kMaxExhaustive + 1, false);
    if (!done[static_cast<std::size_t>(n)]) {
        cache[static_cast<std::size_t>(n)] = filtra::enumerate_topologies(n);
        done[static_cast<std::size_t>(n)] = true;
    }
    return cache[static_cast<std::size_t>(n)];
}

} // namespace testing
