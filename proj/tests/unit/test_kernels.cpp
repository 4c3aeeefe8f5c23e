#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string_view>
#include <vector>

#include <filtra/kernels.hpp>

using namespace filtra::kernels;

namespace {

std::vector<std::uint64_t> random_masks(std::mt19937_64& rng, std::size_t count, int bits)
{
    std::vector<std::uint64_t> out(count);
    const std::uint64_t keep = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (auto& m : out) {
        // sparse masks make subset relations likely
        m = rng() & rng() & keep;
    }
    return out;
}

void compare_tables(const KernelTable& a, const KernelTable& b)
{
    std::mt19937_64 rng(20240611);
    for (std::size_t count : {0, 1, 3, 4, 5, 7, 8, 17, 31, 64}) {
        for (int bits : {3, 8, 64}) {
            for (int trial = 0; trial < 40; ++trial) {
                auto masks = random_masks(rng, count, bits);
                const std::uint64_t x = rng();
                const std::uint64_t y = rng() & rng();
                CHECK(a.union_of_subsets(masks, x) == b.union_of_subsets(masks, x));
                CHECK(a.intersection_of_supersets(masks, y, x) == b.intersection_of_supersets(masks, y, x));
                CHECK(a.subset_flags(masks, x) == b.subset_flags(masks, x));
                CHECK(a.any_subset_meeting(masks, x, y) == b.any_subset_meeting(masks, x, y));
                std::vector<std::uint64_t> o1(count), o2(count);
                a.or_each(masks, x, o1);
                b.or_each(masks, x, o2);
                CHECK(o1 == o2);
                a.and_each(masks, x, o1);
                b.and_each(masks, x, o2);
                CHECK(o1 == o2);
            }
        }
    }
}

} // namespace

TEST_CASE("scalar kernels match naive loops")
{
    const KernelTable& s = table(Isa::scalar);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto masks = random_masks(rng, static_cast<std::size_t>(trial % 40), 6);
        const std::uint64_t bound = rng() & 63;
        std::uint64_t uni = 0;
        std::uint64_t inter = 63;
        std::uint64_t flags = 0;
        bool meeting = false;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if ((masks[i] & ~bound) == 0) {
                uni |= masks[i];
                flags |= std::uint64_t{1} << i;
                meeting = meeting || (masks[i] & 1U);
            }
            if ((masks[i] & 2U) == 2U) {
                inter &= masks[i];
            }
        }
        CHECK(s.union_of_subsets(masks, bound) == uni);
        CHECK(s.intersection_of_supersets(masks, 2, 63) == inter);
        CHECK(s.subset_flags(masks, bound) == flags);
        CHECK(s.any_subset_meeting(masks, bound, 1) == meeting);
    }
}

TEST_CASE("vector kernels agree with the scalar reference")
{
    if (!isa_available(Isa::avx2)) {
        MESSAGE("AVX2 not available; comparing scalar with itself");
        compare_tables(table(Isa::scalar), table(Isa::scalar));
        return;
    }
    compare_tables(table(Isa::scalar), table(Isa::avx2));
}

TEST_CASE("dispatch reports a usable table")
{
    CHECK(isa_available(Isa::scalar));
    CHECK(isa_available(active_isa()));
    CHECK(isa_name(Isa::scalar) == "scalar");
    CHECK(isa_name(Isa::avx2) == "avx2");
    const char* forced = std::getenv("FILTRA_FORCE_SCALAR");
    if (forced != nullptr && std::string_view{forced} == "1") {
        CHECK(active_isa() == Isa::scalar);
    }
    const std::uint64_t masks[] = {1, 2, 4};
    CHECK(union_of_subsets(masks, 3) == 3);
}
