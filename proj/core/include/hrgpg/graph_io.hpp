#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hrgpg/hypergraph.hpp"

namespace hrgpg {

struct NamedGraph {
  std::string name;
  Hypergraph graph;
};

// Line-oriented graph text:
//
//   graph <name>
//   edge <id> <label> (<node>, <node>, ...)
//   ext (<node>, ...)
//
// Whitespace-insensitive; '#' starts a comment.
NamedGraph parse_graph(std::string_view text);
NamedGraph read_graph_file(const std::filesystem::path& path);

// Canonical text: edges in sequence order, `ext` line only when non-empty.
std::string write_graph(const NamedGraph& graph);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace hrgpg
