#include "hrgpg/derivation.hpp"

#include <functional>
#include <sstream>

#include "hrgpg/errors.hpp"
#include "text.hpp"

namespace hrgpg {

std::vector<std::string> leaf_sequence(const DerivationTree& tree) {
  std::vector<std::string> out;
  if (tree.empty()) return out;
  std::function<void(std::size_t)> walk = [&](std::size_t n) {
    for (const auto& slot : tree.nodes[n].slots) {
      if (const auto* leaf = std::get_if<DerivationTree::Leaf>(&slot)) {
        out.push_back(leaf->edge_id);
      } else {
        walk(std::get<DerivationTree::Child>(slot).node);
      }
    }
  };
  walk(tree.root);
  return out;
}

std::vector<std::string> production_sequence(const DerivationTree& tree) {
  std::vector<std::string> out;
  if (tree.empty()) return out;
  std::function<void(std::size_t)> walk = [&](std::size_t n) {
    out.push_back(tree.nodes[n].production);
    for (const auto& slot : tree.nodes[n].slots) {
      if (const auto* child = std::get_if<DerivationTree::Child>(&slot)) walk(child->node);
    }
  };
  walk(tree.root);
  return out;
}

std::string format_tree(const DerivationTree& tree) {
  std::ostringstream out;
  if (tree.empty()) return {};
  std::function<void(std::size_t, int)> walk = [&](std::size_t n, int depth) {
    const auto& node = tree.nodes[n];
    out << std::string(2 * depth, ' ') << node.production;
    if (!node.attachments.empty()) out << " (" << detail::join(node.attachments, ", ") << ')';
    out << '\n';
    for (const auto& slot : node.slots) {
      if (const auto* leaf = std::get_if<DerivationTree::Leaf>(&slot)) {
        out << std::string(2 * depth + 2, ' ') << leaf->edge_id << '\n';
      } else {
        walk(std::get<DerivationTree::Child>(slot).node, depth + 1);
      }
    }
  };
  walk(tree.root, 0);
  return out.str();
}

DerivationTree tree_from_leftmost(const Hrg& g, const std::vector<std::string>& productions) {
  DerivationTree tree;
  std::size_t next = 0;
  std::function<std::size_t(const std::string&)> build = [&](const std::string& edge_id) {
    if (next >= productions.size()) throw DomainError("leftmost derivation ends early");
    const Production* p = g.find(productions[next]);
    if (p == nullptr) throw DomainError("unknown production '" + productions[next] + "'");
    ++next;
    const std::size_t index = tree.nodes.size();
    tree.nodes.push_back({p->name, {}, {}});
    for (std::size_t k = 0; k < p->rhs.edge_count(); ++k) {
      const std::string id = edge_id + "." + std::to_string(k + 1);
      DerivationTree::Slot slot = DerivationTree::Leaf{id};
      if (g.is_nonterminal(p->rhs.edges()[k].label)) slot = DerivationTree::Child{build(id)};
      tree.nodes[index].slots.push_back(std::move(slot));
    }
    return index;
  };
  tree.root = build("s");
  if (next != productions.size()) throw DomainError("leftmost derivation has trailing productions");
  return tree;
}

Hypergraph replay(const Hrg& g, const DerivationTree& tree) {
  Hypergraph host = start_graph(g);
  if (tree.empty()) return host;
  std::function<void(std::size_t, const std::string&)> expand = [&](std::size_t n,
                                                                    const std::string& edge_id) {
    const auto& node = tree.nodes.at(n);
    const Production* p = g.find(node.production);
    if (p == nullptr) throw DomainError("replay: unknown production '" + node.production + "'");
    if (node.slots.size() != p->rhs.edge_count()) {
      throw DomainError("replay: node for " + p->name + " has " + std::to_string(node.slots.size()) +
                        " slots, rhs has " + std::to_string(p->rhs.edge_count()) + " edges");
    }
    host = derive_step(host, edge_id, *p);
    for (std::size_t k = 0; k < node.slots.size(); ++k) {
      const auto* child = std::get_if<DerivationTree::Child>(&node.slots[k]);
      const bool nonterminal = g.is_nonterminal(p->rhs.edges()[k].label);
      if ((child != nullptr) != nonterminal) {
        throw DomainError("replay: slot " + std::to_string(k + 1) + " of " + p->name +
                          " does not match its rhs edge");
      }
      if (child != nullptr) expand(child->node, edge_id + "." + std::to_string(k + 1));
    }
  };
  expand(tree.root, "s");
  return host;
}

}  // namespace hrgpg
