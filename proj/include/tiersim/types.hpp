#pragma once

#include <cstdint>

namespace tiersim {

// Logical page number: page-granular logical address used by the mapping layer.
using Lpn = std::uint64_t;

inline constexpr std::uint64_t kSectorBytes = 512;

}  // namespace tiersim
