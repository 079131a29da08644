#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "hrgpg/grammar.hpp"

namespace hrgpg {

// Tree of production applications. Each node has one slot per rhs edge of its
// production, in mark order: a terminal slot names the input edge it covers, a
// non-terminal slot points at the child node that expands it.
struct DerivationTree {
  struct Leaf {
    std::string edge_id;
    bool operator==(const Leaf&) const = default;
  };
  struct Child {
    std::size_t node;
    bool operator==(const Child&) const = default;
  };
  using Slot = std::variant<Leaf, Child>;

  struct Node {
    std::string production;
    std::vector<std::string> attachments;  // input node bound to each lhs interface
    std::vector<Slot> slots;
  };

  std::vector<Node> nodes;
  std::size_t root = 0;

  bool empty() const { return nodes.empty(); }
};

// Input edge ids in left-to-right leaf order.
std::vector<std::string> leaf_sequence(const DerivationTree& tree);

// Production names in preorder (the leftmost derivation).
std::vector<std::string> production_sequence(const DerivationTree& tree);

// Indented rendering, one production application per line, leaves as edge ids.
std::string format_tree(const DerivationTree& tree);

// Builds the tree whose preorder is `productions`, a leftmost derivation in g.
// Leaf ids are the edge ids derive_step produces from the start graph.
DerivationTree tree_from_leftmost(const Hrg& g, const std::vector<std::string>& productions);

// Re-derives the tree from the start graph with derive_step, expanding in
// preorder. Throws DomainError if a production is unknown or misapplied.
Hypergraph replay(const Hrg& g, const DerivationTree& tree);

}  // namespace hrgpg
