#include "hrgpg/budget.hpp"

#include <cstdlib>
#include <string>

namespace hrgpg {

std::size_t env_budget(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value == 0) return fallback;
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    return fallback;
  }
}

std::size_t default_iso_max_edges() { return env_budget("HRGPG_ISO_MAX_EDGES", 32); }
std::size_t default_enum_max_frontier() { return env_budget("HRGPG_ENUM_MAX_FRONTIER", 200000); }
std::size_t default_search_budget() { return env_budget("HRGPG_SEARCH_BUDGET", 100000); }

}  // namespace hrgpg
