#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrgpg/derivation.hpp"
#include "hrgpg/hypergraph.hpp"
#include "hrgpg/positional.hpp"

namespace hrgpg {

// Production index of the augmented item S' -> S.
inline constexpr std::size_t kAugmented = std::numeric_limits<std::size_t>::max();

// pLR item. `context` is the fetch conjunction guarding the dotted element:
// the element's own connectors for dot > 0, and for dot = 0 the connectors
// inherited through closure, re-targeted at this production's leftmost
// element. Distances count back from the stack top.
struct Item {
  std::size_t production = 0;
  std::size_t dot = 0;
  std::vector<Connector> context;

  auto operator<=>(const Item&) const = default;
};

using ItemSet = std::vector<Item>;  // sorted, unique

ItemSet closure(const PositionalGrammar& pg, ItemSet items);

struct ShiftAction {
  std::string label;
  std::vector<Connector> fetch;
  std::size_t target = 0;

  bool operator==(const ShiftAction&) const = default;
};

struct State {
  ItemSet items;
  std::vector<ShiftAction> shifts;
  std::vector<std::size_t> reduces;  // production indices
  std::map<std::string, std::size_t> gotos;
  bool accept = false;
};

enum class ConflictKind { ShiftReduce, ReduceReduce, ShiftShift, UnanchoredFetch, AcceptReduce };
std::string_view to_string(ConflictKind kind);

struct Conflict {
  std::size_t state = 0;
  ConflictKind kind = ConflictKind::ShiftReduce;
  std::string detail;
};

// Node classes of one production's rhs, precomputed for reduce-time checks.
struct ProductionShape {
  std::vector<std::vector<std::size_t>> interface_class;  // [element][interface-1]
  std::vector<std::size_t> external_class;                // per lhs interface
  std::vector<bool> class_is_external;
};

struct ParseTable {
  PositionalGrammar grammar;
  std::vector<State> states;
  std::vector<ProductionShape> shapes;
  std::vector<Conflict> conflicts;

  bool conflict_free() const { return conflicts.empty(); }
};

// Canonical item-set construction over element labels. Shift/reduce pairs are
// resolved by preferring a fetchable shift; they are reported only when that
// preference is not provably right. Throws DomainError unless every
// production is well-formed and chain-connected.
ParseTable build_table(const PositionalGrammar& pg);

std::string format_item(const PositionalGrammar& pg, const Item& item, const Notation& n = {});
std::string format_table(const ParseTable& table, const Notation& n = {});

struct ParseStats {
  std::size_t shifts = 0;
  std::size_t reduces = 0;
  std::size_t fetch_probes = 0;  // candidate edges examined
};

enum class ParseOutcome { Accept, Reject };

struct ParseResult {
  ParseOutcome outcome = ParseOutcome::Reject;
  std::optional<DerivationTree> tree;
  std::string diagnostic;
  std::string start_edge;
  ParseStats stats;

  bool accepted() const { return outcome == ParseOutcome::Accept; }
};

// Bottom-up parse of a terminal hypergraph. The first shift takes
// `start_edge`, or the lowest-positioned edge shiftable in state 0; every
// later shift fetches through its conjunction. Throws AmbiguityError when a
// fetch is satisfied by two or more edges.
ParseResult parse(const ParseTable& table, const Hypergraph& h,
                  const std::optional<std::string>& start_edge = std::nullopt);

// Edges whose label is shiftable in state 0, in sequence order.
std::vector<std::string> admissible_starts(const ParseTable& table, const Hypergraph& h);

struct RecognitionRun {
  std::string start_edge;
  std::string outcome;  // "accept", "reject" or "ambiguous"
  std::string diagnostic;
  std::vector<std::string> leaves;
  std::vector<std::string> productions;
};

struct RecognitionReport {
  std::vector<RecognitionRun> runs;
  std::size_t accepting = 0;
  std::size_t fetch_ambiguities = 0;
  // Distinct trees over accepting runs, trees equal up to a rotation of
  // their leaf order counted once.
  std::size_t tree_classes = 0;

  bool unambiguous() const { return fetch_ambiguities == 0 && tree_classes <= 1; }
};

RecognitionReport recognition_ambiguity(const ParseTable& table, const Hypergraph& h);

}  // namespace hrgpg
