#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hrgpg/grammar.hpp"
#include "hrgpg/hypergraph.hpp"

namespace hrgpg {

// Connector <k,z,l>: interface k of the source element relates to interface l
// of the target element, the source being z+1 elements before the target.
// z = -1 means the source is the target itself.
struct Connector {
  int source_interface = 1;
  int distance = 0;
  int target_interface = 1;

  bool is_self() const { return distance < 0; }
  auto operator<=>(const Connector&) const = default;
};

// Canonical conjunction order: distance descending, then k, then l.
// Self connectors are oriented k < l.
Connector canonical(Connector c);
void canonicalize(std::vector<Connector>& conjunction);

// (element index 0-based, interface 1-based)
struct InterfaceRef {
  std::size_t element = 0;
  int interface = 1;

  auto operator<=>(const InterfaceRef&) const = default;
};

struct Element {
  std::vector<Connector> conjunction;  // connectors targeting this element
  std::string label;
  int arity = 0;
  std::string instance;  // edge id the element came from, may be empty

  bool operator==(const Element&) const = default;
};

struct PositionalString {
  std::vector<Element> elements;
  std::vector<InterfaceRef> unary;  // sorted; never printed

  bool operator==(const PositionalString&) const = default;
};

struct PositionalProduction {
  std::string name;
  std::string lhs;
  PositionalString body;
  // external_map[i] is the rhs interface carrying lhs interface i+1.
  std::vector<InterfaceRef> external_map;
  std::string origin;

  std::size_t size() const { return body.elements.size(); }
  bool operator==(const PositionalProduction&) const = default;
};

struct PositionalGrammar {
  std::string name;
  LabelSet nonterminals;
  LabelSet terminals;
  std::string start;
  EnteringMap entering;
  std::vector<PositionalProduction> productions;

  std::vector<int> entering_of(std::string_view nonterminal) const;
  bool is_nonterminal(std::string_view label) const { return nonterminals.contains(label); }
};

// Partition of all interfaces of a positional string into node classes, the
// symmetric-transitive closure of its connectors.
class InterfaceClasses {
 public:
  explicit InterfaceClasses(const PositionalString& s);

  std::size_t class_of(InterfaceRef ref) const;
  std::size_t class_count() const { return count_; }
  // Members of one class in (element, interface) order.
  std::vector<InterfaceRef> members(std::size_t cls) const;

 private:
  std::vector<std::size_t> offset_;  // first slot of each element
  std::vector<std::size_t> class_;   // slot -> dense class id (first-occurrence order)
  std::size_t count_ = 0;
};

// Element order = rhs mark order. For each interface whose node already
// occurred, one connector from the node's earliest occurrence (smallest
// element, then smallest interface); repeated nodes inside one element give a
// self connector at the first element that has them. Interfaces on
// single-incidence internal nodes become unary.
// Throws DomainError on a disconnected rhs or arity/external violations.
PositionalProduction translate_production(const Production& p);

// Same synthesis for an input graph under `order` (indices into edges(),
// empty = sequence order). Throws DomainError unless every element after the
// first shares a node with an earlier one.
PositionalString translate_graph(const Hypergraph& h, std::span<const std::size_t> order = {});

PositionalGrammar translate_grammar(const Hrg& g);

// Every element after the first has a connector reaching back (z >= 0), and
// the first has none.
bool is_chain_connected(const PositionalString& s);

// Inverse of translation: nodes are interface classes, unary interfaces get
// their own node, externals follow lhs interface order. Nodes are named
// v1, v2, ... in first-occurrence order; edges take the element instance id
// or e<k>. Throws DomainError on a uniqueness breach or a dangling connector.
Hypergraph realize(const PositionalString& s);
Hypergraph realize(const PositionalProduction& p);
Production realize_production(const PositionalProduction& p);
Hrg realize_grammar(const PositionalGrammar& pg);

struct AxiomReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// Checks the relation axioms: each interface takes part in exactly one kind
// of relation (shares or unary), and the connectors closed under symmetry and
// transitivity give exactly the node-sharing relation of the realized graph.
AxiomReport check_relation_axioms(const PositionalString& s,
                                  std::span<const InterfaceRef> external_map = {});
AxiomReport check_relation_axioms(const PositionalProduction& p);

struct Notation {
  bool unicode = true;
  bool omit_zero_distance = false;  // print <k,l> for z = 0
};

std::string format_connector(const Connector& c, const Notation& n = {});
std::string format_conjunction(const std::vector<Connector>& conjunction, const Notation& n = {});
std::string format_string(const PositionalString& s, const Notation& n = {});
// "S ⇒ ⟨1,−1,3⟩ d ⟨2,0,1⟩ C ... (S1=d1, S2=C2)"
std::string format_production(const PositionalProduction& p, const Notation& n = {});
// How an rhs interface is named inside an external-map annotation: "a2", or
// "a[3]2" (element 3) when the label occurs more than once.
std::string format_interface_ref(const PositionalString& s, InterfaceRef ref);

// Positional grammar text (ASCII notation):
//
//   pg <name>
//   start / nonterminal / terminal lines as in grammar files
//   pprod <name>: <NT> => <conj> <label> <conj> <label> ... (<NT>1=<ref>, ...)
//
// Connectors are <k,z,l> or <k,l> (z = 0), joined with '&'. Interfaces not
// mentioned by any connector or external map are unary.
PositionalGrammar parse_positional_grammar(std::string_view text);
std::string write_positional_grammar(const PositionalGrammar& pg);

}  // namespace hrgpg
