#include "hrgpg/hypergraph.hpp"

#include <numeric>
#include <set>

namespace hrgpg {

Hypergraph::Hypergraph(std::vector<Edge> edges, std::vector<std::string> externals) {
  for (auto& e : edges) add_edge(std::move(e));
  set_externals(std::move(externals));
}

void Hypergraph::register_node(const std::string& node) {
  if (node_index_.contains(node)) return;
  node_index_.emplace(node, nodes_.size());
  nodes_.push_back(node);
}

void Hypergraph::add_node(const std::string& node) { register_node(node); }

void Hypergraph::add_edge(Edge edge) {
  for (const auto& n : edge.attachments) register_node(n);
  edges_.push_back(std::move(edge));
}

void Hypergraph::set_externals(std::vector<std::string> externals) {
  for (const auto& n : externals) register_node(n);
  externals_ = std::move(externals);
}

std::optional<std::size_t> Hypergraph::edge_index(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Hypergraph::node_index(std::string_view node) const {
  auto it = node_index_.find(node);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Hypergraph::degree(std::string_view node) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    for (const auto& a : e.attachments) d += (a == node);
  }
  return d;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IsolatedNode: return "isolated node";
    case ViolationKind::ArityMismatch: return "arity mismatch";
    case ViolationKind::UnknownLabel: return "unknown label";
    case ViolationKind::ZeroArityEdge: return "type-0 edge";
    case ViolationKind::DuplicateExternal: return "duplicate external node";
    case ViolationKind::ExternalNotNode: return "external is not a node";
    case ViolationKind::DuplicateEdgeId: return "duplicate edge id";
    case ViolationKind::LabelInBothSets: return "label in both N and Σ";
    case ViolationKind::UndeclaredStart: return "undeclared start symbol";
    case ViolationKind::StartNotNonterminal: return "start symbol not a non-terminal";
    case ViolationKind::LhsNotNonterminal: return "lhs not a non-terminal";
    case ViolationKind::TypeMismatch: return "type mismatch lhs/rhs";
    case ViolationKind::RhsDisconnected: return "rhs not connected";
    case ViolationKind::RhsInvalid: return "invalid rhs";
    case ViolationKind::EnteringOutOfRange: return "entering interface out of range";
    case ViolationKind::ZeroArityLabel: return "type-0 label";
    case ViolationKind::DuplicateProductionName: return "duplicate production name";
  }
  return "unknown";
}

bool has_violation(const ValidationReport& report, ViolationKind kind) {
  for (const auto& v : report) {
    if (v.kind == kind) return true;
  }
  return false;
}

namespace {

void check_structure(const Hypergraph& h, ValidationReport& out) {
  std::set<std::string> ids;
  std::set<std::string> attached;
  for (const auto& e : h.edges()) {
    if (!ids.insert(e.id).second) {
      out.push_back({ViolationKind::DuplicateEdgeId, e.id, "edge id '" + e.id + "' used twice"});
    }
    if (e.attachments.empty()) {
      out.push_back({ViolationKind::ZeroArityEdge, e.id, "edge '" + e.id + "' has no attachments"});
    }
    attached.insert(e.attachments.begin(), e.attachments.end());
  }
  for (const auto& n : h.nodes()) {
    if (!attached.contains(n)) {
      out.push_back({ViolationKind::IsolatedNode, n, "node '" + n + "' has no adjacent edge"});
    }
  }
  std::set<std::string> seen;
  for (const auto& x : h.externals()) {
    if (!h.has_node(x)) {
      out.push_back({ViolationKind::ExternalNotNode, x, "external '" + x + "' is not a node"});
    }
    if (!seen.insert(x).second) {
      out.push_back({ViolationKind::DuplicateExternal, x, "external '" + x + "' repeated"});
    }
  }
}

std::string arity_message(const Edge& e, int expected) {
  return "edge '" + e.id + "' labelled '" + e.label + "' has " +
         std::to_string(e.attachments.size()) + " attachments, type is " +
         std::to_string(expected);
}

}  // namespace

ValidationReport validate(const Hypergraph& h, const LabelSet& labels) {
  ValidationReport out;
  for (const auto& e : h.edges()) {
    auto it = labels.find(e.label);
    if (it == labels.end()) {
      out.push_back({ViolationKind::UnknownLabel, e.id, "label '" + e.label + "' is not declared"});
    } else if (static_cast<std::size_t>(it->second) != e.attachments.size()) {
      out.push_back({ViolationKind::ArityMismatch, e.id, arity_message(e, it->second)});
    }
  }
  check_structure(h, out);
  return out;
}

ValidationReport validate(const Hypergraph& h) {
  ValidationReport out;
  LabelSet inferred;
  for (const auto& e : h.edges()) {
    auto [it, fresh] = inferred.emplace(e.label, static_cast<int>(e.attachments.size()));
    if (!fresh && static_cast<std::size_t>(it->second) != e.attachments.size()) {
      out.push_back({ViolationKind::ArityMismatch, e.id, arity_message(e, it->second)});
    }
  }
  check_structure(h, out);
  return out;
}

bool is_connected(const Hypergraph& h) {
  const std::size_t n = h.node_count();
  const std::size_t m = h.edge_count();
  if (n + m == 0) return true;
  // Union-find over nodes [0, n) and edges [n, n + m).
  std::vector<std::size_t> parent(n + m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& a : h.edges()[i].attachments) {
      parent[find(n + i)] = find(*h.node_index(a));
    }
  }
  const std::size_t root = find(0);
  for (std::size_t x = 1; x < n + m; ++x) {
    if (find(x) != root) return false;
  }
  return true;
}

}  // namespace hrgpg
