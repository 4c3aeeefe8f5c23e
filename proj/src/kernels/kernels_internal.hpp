#pragma once

#include "filtra/kernels.hpp"

namespace filtra::kernels::detail {

const KernelTable& scalar_table();
#if defined(FILTRA_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif

} // namespace filtra::kernels::detail
