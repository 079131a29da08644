#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hrgpg/grammar.hpp"
#include "hrgpg/hypergraph.hpp"

namespace hrgpg::testing {

std::filesystem::path fixture(std::string_view name);
std::filesystem::path repo_file(std::string_view relative);

Hrg load_grammar_fixture(std::string_view name);
Hypergraph load_graph_fixture(std::string_view name);

// Directed cycle whose i-th edge e<i+1> carries the i-th letter of `word`,
// from node n<i> to node n<i+1 mod n>.
Hypergraph cycle_graph(std::string_view word);

// All words of length n over `letters`, lexicographic.
std::vector<std::string> words(std::string_view letters, std::size_t n);

// Independent membership test for the cycle languages: binary edges with a
// label in `labels`, one connected component, in- and out-degree 1 everywhere.
bool is_directed_cycle(const Hypergraph& h, const std::set<std::string>& labels);

// Labels read along the cycle starting at edge 0; empty if h is not a cycle.
std::string cycle_word(const Hypergraph& h);

// Number of distinct rotations of a word: the derivation-tree count of the
// corresponding cycle in the cycle grammar.
std::size_t distinct_rotations(const std::string& word);

struct RandomGraphShape {
  std::size_t min_edges = 1;
  std::size_t max_edges = 6;
  std::size_t max_externals = 3;
  double reuse = 0.4;  // chance that an extra attachment reuses a node
};

// Connected graph over labels a/2 b/2 t/3 u/1 with random externals.
Hypergraph random_connected(std::mt19937_64& rng, const RandomGraphShape& shape = {});
LabelSet random_labels();

// Random edge order in which every edge after the first touches an earlier one.
std::vector<std::size_t> random_chain_order(const Hypergraph& h, std::mt19937_64& rng);

}  // namespace hrgpg::testing
