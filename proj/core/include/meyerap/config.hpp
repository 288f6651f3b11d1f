#pragma once

#include <cstddef>

namespace meyerap {

/// Default cap on points expanded or candidates visited by one operation.
inline constexpr std::size_t kDefaultPointBudget = 1'000'000;

}  // namespace meyerap
