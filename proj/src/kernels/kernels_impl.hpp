// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dirac/kernels/kernels.hpp"

namespace dirac::kernels::detail {

// Phase recurrences are reseeded from sin/cos at this cadence to bound drift.
inline constexpr int kReseed = 64;

const KernelTable& scalar_table();
#ifdef DIRAC_HAVE_AVX2
const KernelTable& avx2_table();
#endif

}  // namespace dirac::kernels::detail
