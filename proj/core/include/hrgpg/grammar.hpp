#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hrgpg/hypergraph.hpp"

namespace hrgpg {

// A production A -> R. The edge sequence of `rhs` is the mark order
// alpha_1 < alpha_2 < ... of its hyperedges.
struct Production {
  std::string name;
  std::string lhs;
  Hypergraph rhs;
  // Name of the production this one is a permuted copy of; empty for
  // productions written by the grammar author.
  std::string origin;

  bool is_duplicate() const { return !origin.empty(); }
};

// Entering interfaces of a non-terminal, 1-based.
using EnteringMap = std::map<std::string, std::vector<int>, std::less<>>;

struct Hrg {
  std::string name;
  LabelSet nonterminals;
  LabelSet terminals;
  std::vector<Production> productions;
  std::string start;
  // Non-terminals absent from the map enter through interface 1.
  EnteringMap entering;

  LabelSet labels() const;
  bool is_nonterminal(std::string_view label) const { return nonterminals.contains(label); }
  bool is_terminal(std::string_view label) const { return terminals.contains(label); }
  std::vector<int> entering_of(std::string_view nonterminal) const;
  const Production* find(std::string_view production) const;

  // The grammar without permuted copies; derivation counts over it are not
  // inflated by duplicated permutations.
  Hrg without_duplicates() const;
};

ValidationReport validate_grammar(const Hrg& g);

// One S-labelled edge (id "s") attached to arity(S) distinct fresh nodes, no
// externals.
Hypergraph start_graph(const Hrg& g);

// Replaces edge `edge_index` of `host` by a fresh copy of rhs(p): the i-th
// external node of the rhs is fused with the i-th attachment of the edge,
// every other rhs node is fresh. The copy is spliced in at the replaced edge's
// position, in mark order, with edge ids "<replaced id>.<k>" (k 1-based).
// Throws DomainError on label or arity mismatch.
Hypergraph derive_step(const Hypergraph& host, std::size_t edge_index, const Production& p);
Hypergraph derive_step(const Hypergraph& host, std::string_view edge_id, const Production& p);

}  // namespace hrgpg
