#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrgpg/budget.hpp"
#include "hrgpg/hypergraph.hpp"

namespace hrgpg {

// Node and edge bijection from the first graph onto the second.
struct Isomorphism {
  std::map<std::string, std::string> nodes;
  std::vector<std::size_t> edges;  // edges[i] = index in the second graph
};

struct IsoOptions {
  std::size_t max_edges = default_iso_max_edges();
};

// Backtracking search for a bijection preserving labels, attachment sequences
// position-wise and the external sequence position-wise. Throws BudgetError
// when either graph has more than `max_edges` edges.
std::optional<Isomorphism> isomorphic(const Hypergraph& a, const Hypergraph& b,
                                      const IsoOptions& options = {});

// Isomorphism-invariant fingerprint. Equal keys are necessary (not sufficient)
// for isomorphism; used to bucket graphs before running the search.
std::string invariant_key(const Hypergraph& h);

}  // namespace hrgpg
