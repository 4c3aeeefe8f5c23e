#include "kernels/kernels_internal.hpp"

#include <cstdlib>
#include <string_view>

namespace filtra::kernels {
namespace {

bool force_scalar()
{
    const char* env = std::getenv("FILTRA_FORCE_SCALAR");
    return env != nullptr && std::string_view{env} != "" && std::string_view{env} != "0";
}

Isa detect()
{
    if (!force_scalar() && isa_available(Isa::avx2)) {
        return Isa::avx2;
    }
    return Isa::scalar;
}

} // namespace

bool isa_available(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(FILTRA_HAVE_AVX2_KERNELS)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

const KernelTable& table(Isa isa)
{
#if defined(FILTRA_HAVE_AVX2_KERNELS)
    if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
        return detail::avx2_table();
    }
#endif
    (void)isa;
    return detail::scalar_table();
}

Isa active_isa()
{
    static const Isa isa = detect();
    return isa;
}

const KernelTable& active()
{
    static const KernelTable& t = table(active_isa());
    return t;
}

std::string_view isa_name(Isa isa)
{
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

} // namespace filtra::kernels
