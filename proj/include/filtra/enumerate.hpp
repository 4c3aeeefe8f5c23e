#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "filtra/topology.hpp"

namespace filtra {

/// Largest n enumerated without an explicit opt-in.
inline constexpr int kMaxExhaustive = 5;
/// Largest n enumerated at all.
inline constexpr int kMaxEnumerable = 6;

/// Calls `visit` with the minimal-neighbourhood vector of every preorder on
/// n points (y ∈ N(x) iff x ≤ y), each exactly once.  Order follows the
/// extension search, not the canonical topology order.
void for_each_preorder(int n, const std::function<void(std::span<const std::uint64_t>)>& visit);

/// Canonical order on topologies over one ground: lexicographic on the
/// ascending open-set masks.
bool topology_less(const Topology& a, const Topology& b);

/// Every topology on n points exactly once, in canonical order.  n > 5 needs
/// `allow_large`; n > 6 is refused.
std::vector<Topology> enumerate_topologies(int n, bool allow_large = false);
/// Number of topologies on n points, without materializing them.
std::uint64_t count_topologies(int n, bool allow_large = false);

} // namespace filtra
