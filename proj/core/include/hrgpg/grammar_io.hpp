#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hrgpg/grammar.hpp"

namespace hrgpg {

// Grammar text:
//
//   grammar <name>
//   start <NT>
//   nonterminal <name>/<arity> [entering i,j,...]
//   terminal <name>/<arity> <name>/<arity> ...
//   prod <name>: <NT> -> <label>(<node>,...) ... ext(<node>,...)
//
// The rhs edge listing order is the mark order. Node names are local to one
// production. Rhs edge ids are "e1", "e2", ... in listing order.
Hrg parse_grammar(std::string_view text);
Hrg read_grammar_file(const std::filesystem::path& path);

std::string write_grammar(const Hrg& g);

}  // namespace hrgpg
