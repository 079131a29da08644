#pragma once

#include <cstddef>

namespace hrgpg {

// Budgets default to desk-scale values and can be overridden through the
// environment so that CI and the CLI share one knob.
//
//   HRGPG_ISO_MAX_EDGES      isomorphism search bound (edges), default 32
//   HRGPG_ENUM_MAX_FRONTIER  derivation enumeration frontier bound, default 200000
//   HRGPG_SEARCH_BUDGET      normalization assignments tried, default 100000
std::size_t default_iso_max_edges();
std::size_t default_enum_max_frontier();
std::size_t default_search_budget();

// Reads a positive integer from `name`, or returns `fallback`.
std::size_t env_budget(const char* name, std::size_t fallback);

}  // namespace hrgpg
