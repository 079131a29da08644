#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hrgpg/budget.hpp"
#include "hrgpg/grammar.hpp"
#include "hrgpg/positional.hpp"

namespace hrgpg {

using Ordering = std::vector<std::size_t>;  // 0-based positions; printed 1-based

struct WellFormedness {
  bool ok = true;
  std::vector<int> failing;  // entering interfaces not tied to the leftmost element
  std::vector<std::string> diagnostics;
};

// Every entering lhs interface must reach an interface of element 1 through
// the shares closure. Throws DomainError on an out-of-range interface.
WellFormedness is_well_formed(const PositionalProduction& p, std::span<const int> entering);

// All n! orderings in lexicographic order, identity first. n <= 8.
std::vector<Ordering> all_orderings(std::size_t n);

// Same rhs with its edge sequence reordered: position i takes the edge at
// perm[i]. Throws DomainError unless perm is a bijection on the rhs edges.
Production simple_permute(const Production& p, std::span<const std::size_t> perm);

enum class PermutationKind { Identity, Simple, Duplicated };
std::string_view to_string(PermutationKind kind);

struct ProductionPlan {
  std::string production;
  std::vector<Ordering> orderings;  // one per emitted copy, first keeps the name

  PermutationKind kind() const;
};

struct PermutationPlan {
  std::vector<ProductionPlan> entries;

  std::size_t cost() const;  // sum of (orderings - 1)
};

std::string format_ordering(const Ordering& o);  // "(2,1)"
std::string format_plan(const PermutationPlan& plan);

struct NormalizeOptions {
  std::size_t max_duplicates = 2;
  // Accept the first well-formed, chain-connected ordering per production
  // without requiring a conflict-free parse table.
  bool wf_only = false;
  std::size_t search_budget = default_search_budget();
};

struct NormalizeResult {
  bool ok = false;
  Hrg grammar;                  // reordered HRG, duplicated copies appended after their origin
  PositionalGrammar positional;
  PermutationPlan plan;
  std::vector<std::string> diagnostics;
  std::size_t assignments_tried = 0;
};

// Exhaustive, lexicographic search for orderings. Stage one picks one
// ordering per production; stage two deepens on the number of duplicated
// copies up to max_duplicates. The first plan found has minimal cost.
NormalizeResult normalize(const Hrg& g, const NormalizeOptions& options = {});

// Applies a plan: each production is replaced by one copy per ordering,
// copies after the first named "<name>#2", "<name>#3", ...
Hrg apply_plan(const Hrg& g, const PermutationPlan& plan);

}  // namespace hrgpg
