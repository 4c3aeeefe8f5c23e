#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "filtra/error.hpp"

namespace filtra {

inline constexpr int kMaxGround = 64;

/// Subset of {0, ..., n-1} stored as a bitmask; bit i is point i.
class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr PointSet singleton(int point) { return PointSet{std::uint64_t{1} << point}; }
    static PointSet of(std::initializer_list<int> points)
    {
        std::uint64_t bits = 0;
        for (int p : points) {
            if (p < 0 || p >= kMaxGround) {
                throw InputError("point index " + std::to_string(p) + " outside 0..63");
            }
            bits |= std::uint64_t{1} << p;
        }
        return PointSet{bits};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int point) const { return (bits_ >> point) & 1U; }
    constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr PointSet operator|(PointSet o) const { return PointSet{bits_ | o.bits_}; }
    constexpr PointSet operator&(PointSet o) const { return PointSet{bits_ & o.bits_}; }
    /// Set difference.
    constexpr PointSet operator-(PointSet o) const { return PointSet{bits_ & ~o.bits_}; }
    constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
    constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

    std::vector<int> points() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(std::countr_zero(b));
        }
        return out;
    }

    constexpr auto operator<=>(const PointSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// The fixed ground set X = {0, ..., n-1}.
class GroundSet {
public:
    constexpr GroundSet() = default;
    constexpr explicit GroundSet(int n) : n_(n)
    {
        if (n < 0 || n > kMaxGround) {
            throw InputError("ground size " + std::to_string(n) + " outside 0..64");
        }
    }

    constexpr int size() const { return n_; }
    constexpr PointSet full() const
    {
        return PointSet{n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1};
    }
    constexpr bool contains(PointSet a) const { return a.subset_of(full()); }
    constexpr PointSet complement(PointSet a) const { return full() - a; }

    /// Number of subsets of X, saturating at UINT64_MAX for n = 64.
    constexpr std::uint64_t subset_count() const
    {
        return n_ >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << n_;
    }

    void require(PointSet a) const
    {
        if (!contains(a)) {
            throw InputError("set uses points outside ground of size " + std::to_string(n_));
        }
    }
    void require_same(GroundSet other) const
    {
        if (other.n_ != n_) {
            throw InputError("ground mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
        }
    }

    constexpr bool operator==(const GroundSet&) const = default;

private:
    int n_ = 0;
};

} // namespace filtra
