#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hrgpg/budget.hpp"
#include "hrgpg/grammar.hpp"
#include "hrgpg/hypergraph.hpp"

namespace hrgpg {

// One isomorphism class of terminal graphs and how many distinct derivation
// trees produce it.
struct GraphClass {
  Hypergraph representative;
  std::size_t derivations = 0;
  std::vector<std::string> first_derivation;  // leftmost production sequence
};

struct EnumerateOptions {
  std::size_t max_edges = 4;
  std::size_t max_frontier = default_enum_max_frontier();
  // Total sentential forms expanded; guards against unit-production cycles.
  std::size_t max_expansions = 50 * default_enum_max_frontier();
};

// Breadth-first closure of derive_step from start_graph(g), always expanding
// the leftmost non-terminal edge (by mark order), keeping terminal graphs with
// at most max_edges edges. Classes come out ordered by edge count, then by
// discovery. Throws BudgetError when the frontier or expansion bound is hit.
std::vector<GraphClass> enumerate_graphs(const Hrg& g, const EnumerateOptions& options);

// Index of the class isomorphic to h, or -1.
long find_class(const std::vector<GraphClass>& classes, const Hypergraph& h);

// Number of derivation trees of g producing a graph isomorphic to h
// (0 = not in the language). Enumerates up to |E(h)| edges.
std::size_t generation_ambiguity(const Hrg& g, const Hypergraph& h,
                                 const EnumerateOptions& options = {});

}  // namespace hrgpg
