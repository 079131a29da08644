#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hrgpg {

// Label universe: label name -> arity (its type).
using LabelSet = std::map<std::string, int, std::less<>>;

struct Label {
  std::string name;
  int arity = 0;

  bool operator==(const Label&) const = default;
};

// A hyperedge. Attachment position i (0-based here, 1-based in notation) is
// the edge's interface i+1.
struct Edge {
  std::string id;
  std::string label;
  std::vector<std::string> attachments;

  bool operator==(const Edge&) const = default;
};

// Labelled hypergraph with an optional external-node sequence.
//
// Nodes are opaque strings kept in first-occurrence order (explicitly added
// nodes, then attachments, then externals). Edge order is significant for
// grammar right-hand sides, where it is the mark order.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::vector<Edge> edges, std::vector<std::string> externals = {});

  // Registers a node without attaching it; used to build (invalid) graphs
  // with isolated nodes.
  void add_node(const std::string& node);
  void add_edge(Edge edge);
  void set_externals(std::vector<std::string> externals);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& externals() const { return externals_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> edge_index(std::string_view id) const;
  std::optional<std::size_t> node_index(std::string_view node) const;
  bool has_node(std::string_view node) const { return node_index(node).has_value(); }

  // Number of (edge, position) incidences on `node`; loops count twice.
  std::size_t degree(std::string_view node) const;

  bool operator==(const Hypergraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_ && externals_ == other.externals_;
  }

 private:
  void register_node(const std::string& node);

  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t, std::less<>> node_index_;
  std::vector<Edge> edges_;
  std::vector<std::string> externals_;
};

enum class ViolationKind {
  IsolatedNode,
  ArityMismatch,
  UnknownLabel,
  ZeroArityEdge,
  DuplicateExternal,
  ExternalNotNode,
  DuplicateEdgeId,
  LabelInBothSets,
  UndeclaredStart,
  StartNotNonterminal,
  LhsNotNonterminal,
  TypeMismatch,
  RhsDisconnected,
  RhsInvalid,
  EnteringOutOfRange,
  ZeroArityLabel,
  DuplicateProductionName,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string subject;  // offending node/edge/label/production id
  std::string message;

  bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

bool has_violation(const ValidationReport& report, ViolationKind kind);

// Checks arity agreement, distinct externals, no isolated nodes, no type-0
// edges, and that every label is declared in `labels`.
ValidationReport validate(const Hypergraph& h, const LabelSet& labels);

// Same checks, but the label universe is inferred from the graph itself: the
// first edge carrying a label fixes its arity.
ValidationReport validate(const Hypergraph& h);

// type(H) = |ext_H|
inline std::size_t type_of(const Hypergraph& h) { return h.externals().size(); }

// True iff the bipartite node/edge incidence graph is connected. The empty
// graph counts as connected.
bool is_connected(const Hypergraph& h);

}  // namespace hrgpg
