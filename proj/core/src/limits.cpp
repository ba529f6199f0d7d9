#include "raag/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "raag/error.hpp"

namespace raag {
namespace {

std::size_t read_env_limit() {
  const char* env = std::getenv("RAAG_MAX_STATES");
  if (env == nullptr || *env == '\0') return kDefaultMaxStates;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v == 0) return kDefaultMaxStates;
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return kDefaultMaxStates;
  }
}

std::atomic<std::size_t>& limit_slot() {
  static std::atomic<std::size_t> slot{read_env_limit()};
  return slot;
}

}  // namespace

std::size_t max_states() { return limit_slot().load(); }

void set_max_states(std::size_t limit) { limit_slot().store(limit); }

void check_state_budget(std::size_t count, std::string_view what) {
  if (count > max_states()) {
    throw ResourceLimitError(std::string(what) + ": more than " + std::to_string(max_states()) +
                             " states (raise RAAG_MAX_STATES)");
  }
}

}  // namespace raag
