#include "mask_set.hpp"

#include <algorithm>
#include <bit>

namespace filtra::detail {

MaskSet::MaskSet(int n) : dense_(n <= kDenseLimit)
{
    if (dense_) {
        bitmap_.assign(((std::size_t{1} << n) + 63) / 64, 0);
    }
}

bool MaskSet::insert(std::uint64_t m)
{
    if (dense_) {
        std::uint64_t& word = bitmap_[m >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (m & 63);
        if (word & bit) {
            return false;
        }
        word |= bit;
        ++size_;
        return true;
    }
    if (hashed_.insert(m).second) {
        ++size_;
        return true;
    }
    return false;
}

bool MaskSet::contains(std::uint64_t m) const
{
    if (dense_) {
        return (bitmap_[m >> 6] >> (m & 63)) & 1U;
    }
    return hashed_.contains(m);
}

std::vector<std::uint64_t> MaskSet::sorted() const
{
    std::vector<std::uint64_t> out;
    out.reserve(size_);
    if (dense_) {
        for (std::size_t w = 0; w < bitmap_.size(); ++w) {
            for (std::uint64_t b = bitmap_[w]; b != 0; b &= b - 1) {
                out.push_back((w << 6) | static_cast<std::uint64_t>(std::countr_zero(b)));
            }
        }
        return out;
    }
    out.assign(hashed_.begin(), hashed_.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace filtra::detail
