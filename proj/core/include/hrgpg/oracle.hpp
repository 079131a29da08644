#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hrgpg/enumerate.hpp"
#include "hrgpg/graph_io.hpp"
#include "hrgpg/plr.hpp"

namespace hrgpg {

enum class MutationKind { Relabel, Delete, Split };
std::string_view to_string(MutationKind kind);

// Relabel: one edge gets another terminal of the same arity.
// Delete: one edge goes, with any node it leaves isolated.
// Split: one incidence of a shared node moves to a fresh node.
// Returns nullopt when the kind does not apply to h.
std::optional<Hypergraph> mutate(const Hypergraph& h, MutationKind kind, const LabelSet& terminals,
                                 std::mt19937_64& rng);

struct OracleCase {
  std::string name;
  std::size_t edges = 0;
  bool member = false;  // enumeration says h is in the language
  bool parsed = false;  // parser accepted
  std::string parser_note;

  bool agrees() const { return member == parsed; }
};

struct OracleOptions {
  std::size_t max_edges = 0;      // enumerate the language up to this size; 0 = corpus only
  std::size_t mutations = 200;    // out-of-language mutants drawn from the enumerated graphs
  std::uint64_t seed = 20240607;
  EnumerateOptions enumeration;
};

struct OracleReport {
  std::vector<OracleCase> cases;
  std::size_t agreeing = 0;
  std::size_t members = 0;
  std::size_t mutants = 0;

  bool all_agree() const { return agreeing == cases.size(); }
};

// Compares parser acceptance with enumeration membership on every graph of
// the language up to `max_edges`, on seeded mutants of those graphs that fall
// outside the language, and on `corpus`. The table is built from g, which
// must already be well-formed.
OracleReport run_oracle(const Hrg& g, const std::vector<NamedGraph>& corpus, const OracleOptions& options);

}  // namespace hrgpg
