#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace filtra::detail {

/// Deduplicating set of subset masks: a dense bitmap over all 2^n subsets for
/// small grounds, a hash set otherwise.
class MaskSet {
public:
    explicit MaskSet(int n);

    /// Returns true if `m` was not present.
    bool insert(std::uint64_t m);
    bool contains(std::uint64_t m) const;
    std::size_t size() const { return size_; }
    /// Ascending.
    std::vector<std::uint64_t> sorted() const;

private:
    static constexpr int kDenseLimit = 20;
    bool dense_;
    std::vector<std::uint64_t> bitmap_;
    std::unordered_set<std::uint64_t> hashed_;
    std::size_t size_ = 0;
};

} // namespace filtra::detail
