#include "filtra/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace filtra {
namespace {

void require_size(int n, bool allow_large)
{
    if (n < 0 || n > kMaxEnumerable) {
        throw InputError("enumeration supports 0 <= n <= " + std::to_string(kMaxEnumerable) + ", got " +
                         std::to_string(n));
    }
    if (n > kMaxExhaustive && !allow_large) {
        throw InputError("n = " + std::to_string(n) + " is long-running; pass --allow-large");
    }
}

using Nbhds = std::array<std::uint64_t, kMaxGround>;

// Extends a preorder on points 0..k-1 by point k.  `up` is the set of points
// above k and `down` the set below; transitivity needs `up` to be an up-set,
// `down` a down-set, and every d in `down` below every u in `up`.
void extend(int n, int k, Nbhds& nb, const std::function<void(std::span<const std::uint64_t>)>& visit)
{
    if (k == n) {
        visit(std::span<const std::uint64_t>(nb.data(), static_cast<std::size_t>(n)));
        return;
    }
    const std::uint64_t count = std::uint64_t{1} << k;
    std::vector<std::uint64_t> ups;
    std::vector<std::uint64_t> downs;
    for (std::uint64_t m = 0; m < count; ++m) {
        bool up = true;
        bool down = true;
        for (int x = 0; x < k; ++x) {
            const std::uint64_t above = nb[static_cast<std::size_t>(x)];
            if ((m >> x) & 1U) {
                up = up && (above & ~m) == 0;
            } else {
                down = down && (above & m) == 0;
            }
        }
        // m is a down-set iff its complement is an up-set
        if (up) {
            ups.push_back(m);
        }
        if (down) {
            downs.push_back(m);
        }
    }
    const std::uint64_t self = std::uint64_t{1} << k;
    for (std::uint64_t d : downs) {
        std::uint64_t allowed = count - 1;
        for (std::uint64_t b = d; b != 0; b &= b - 1) {
            allowed &= nb[static_cast<std::size_t>(std::countr_zero(b))];
        }
        for (std::uint64_t u : ups) {
            if ((u & ~allowed) != 0) {
                continue;
            }
            Nbhds next = nb;
            for (std::uint64_t b = d; b != 0; b &= b - 1) {
                next[static_cast<std::size_t>(std::countr_zero(b))] |= self;
            }
            next[static_cast<std::size_t>(k)] = u | self;
            extend(n, k + 1, next, visit);
        }
    }
}

} // namespace

void for_each_preorder(int n, const std::function<void(std::span<const std::uint64_t>)>& visit)
{
    require_size(n, true);
    Nbhds nb{};
    extend(n, 0, nb, visit);
}

bool topology_less(const Topology& a, const Topology& b)
{
    const auto x = a.opens().masks();
    const auto y = b.opens().masks();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::vector<Topology> enumerate_topologies(int n, bool allow_large)
{
    require_size(n, allow_large);
    const GroundSet g{n};
    std::vector<Topology> out;
    for_each_preorder(n, [&](std::span<const std::uint64_t> nb) { out.push_back(Topology::from_neighborhoods(g, nb)); });
    std::sort(out.begin(), out.end(), topology_less);
    return out;
}

std::uint64_t count_topologies(int n, bool allow_large)
{
    require_size(n, allow_large);
    std::uint64_t total = 0;
    for_each_preorder(n, [&](std::span<const std::uint64_t>) { ++total; });
    return total;
}

} // namespace filtra
