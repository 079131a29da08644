#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hrgpg/grammar.hpp"

namespace hrgpg::detail {

enum class TokenKind { Ident, Punct };

struct Token {
  TokenKind kind;
  std::string text;
};

// Tokenizes one line. Identifiers start with [A-Za-z0-9_] and continue with
// [A-Za-z0-9_'#.]; "-<digits>" (also with U+2212) is one identifier. '#' at a
// token boundary starts a comment. Unicode notation is folded to ASCII:
// ⟨ ⟩ ∧ ⇒ → become < > & => ->.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no);

std::vector<std::string_view> split_lines(std::string_view text);

class Cursor {
 public:
  Cursor(std::vector<Token> tokens, std::size_t line_no)
      : tokens_(std::move(tokens)), line_(line_no) {}

  bool at_end() const { return pos_ >= tokens_.size(); }
  std::size_t line() const { return line_; }
  const Token* peek() const { return at_end() ? nullptr : &tokens_[pos_]; }
  bool peek_is(std::string_view punct) const;

  // Consumes `punct` if it is next.
  bool accept(std::string_view punct);
  void expect(std::string_view punct);
  std::string ident(std::string_view what);
  int integer(std::string_view what);
  void expect_end();

  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

// Parses "<name>/<arity>".
struct LabelDecl {
  std::string name;
  int arity;
};
LabelDecl label_decl(Cursor& c);

// Parses "(a, b, ...)" after an optional leading keyword has been consumed.
std::vector<std::string> node_list(Cursor& c);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// start / nonterminal / terminal lines, shared by grammar and positional
// grammar files. Returns false if `keyword` is none of them.
bool parse_label_directive(const std::string& keyword, Cursor& c, std::string& start,
                           LabelSet& nonterminals, LabelSet& terminals, EnteringMap& entering);
std::string write_label_directives(const std::string& start, const LabelSet& nonterminals,
                                   const LabelSet& terminals, const EnteringMap& entering);

}  // namespace hrgpg::detail
