#pragma once

#include <cstddef>
#include <string_view>

namespace raag {

inline constexpr std::size_t kDefaultMaxStates = 5'000'000;

/// Upper bound on the number of states any exhaustive enumeration may visit.
/// Read once from RAAG_MAX_STATES; falls back to kDefaultMaxStates.
std::size_t max_states();

/// Overrides the budget for the current process (tests, CLI).
void set_max_states(std::size_t limit);

/// Throws ResourceLimitError when `count` exceeds max_states().
void check_state_budget(std::size_t count, std::string_view what);

}  // namespace raag
