#include "hrgpg/grammar_io.hpp"

#include <sstream>

#include "hrgpg/errors.hpp"
#include "hrgpg/graph_io.hpp"
#include "text.hpp"

namespace hrgpg {

using detail::Cursor;

namespace {

void declare(Cursor& c, LabelSet& set, const detail::LabelDecl& d) {
  if (!set.emplace(d.name, d.arity).second) c.fail("label '" + d.name + "' declared twice");
}

// Shared by grammar and positional grammar files.
bool parse_common_directive(const std::string& keyword, Cursor& c, std::string& start,
                            LabelSet& nonterminals, LabelSet& terminals, EnteringMap& entering) {
  if (keyword == "start") {
    if (!start.empty()) c.fail("duplicate 'start' line");
    start = c.ident("start symbol");
    return true;
  }
  if (keyword == "nonterminal") {
    do {
      const auto d = detail::label_decl(c);
      declare(c, nonterminals, d);
      const detail::Token* t = c.peek();
      if (t != nullptr && t->kind == detail::TokenKind::Ident && t->text == "entering") {
        c.ident("entering");
        std::vector<int> interfaces;
        do {
          interfaces.push_back(c.integer("entering interface"));
        } while (c.accept(","));
        entering[d.name] = std::move(interfaces);
      }
    } while (!c.at_end());
    return true;
  }
  if (keyword == "terminal") {
    do {
      declare(c, terminals, detail::label_decl(c));
    } while (!c.at_end());
    return true;
  }
  return false;
}

void resolve_origins(std::vector<Production>& productions) {
  for (auto& p : productions) {
    const auto hash = p.name.rfind('#');
    if (hash == std::string::npos || hash == 0) continue;
    const std::string base = p.name.substr(0, hash);
    for (const auto& q : productions) {
      if (q.name == base) {
        p.origin = base;
        break;
      }
    }
  }
}

}  // namespace

namespace detail {

// Used by the positional grammar reader.
bool parse_label_directive(const std::string& keyword, Cursor& c, std::string& start,
                           LabelSet& nonterminals, LabelSet& terminals, EnteringMap& entering) {
  return parse_common_directive(keyword, c, start, nonterminals, terminals, entering);
}

std::string write_label_directives(const std::string& start, const LabelSet& nonterminals,
                                   const LabelSet& terminals, const EnteringMap& entering) {
  std::ostringstream out;
  out << "start " << start << '\n';
  for (const auto& [name, arity] : nonterminals) {
    out << "nonterminal " << name << '/' << arity;
    auto it = entering.find(name);
    if (it != entering.end()) {
      out << " entering ";
      for (std::size_t i = 0; i < it->second.size(); ++i) out << (i ? "," : "") << it->second[i];
    }
    out << '\n';
  }
  if (!terminals.empty()) {
    out << "terminal";
    for (const auto& [name, arity] : terminals) out << ' ' << name << '/' << arity;
    out << '\n';
  }
  return out.str();
}

}  // namespace detail

Hrg parse_grammar(std::string_view text) {
  Hrg g;
  bool header = false;
  std::size_t line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    Cursor c(detail::tokenize(line, line_no), line_no);
    if (c.at_end()) continue;
    const std::string keyword = c.ident("directive");
    if (keyword == "grammar") {
      if (header) c.fail("duplicate 'grammar' header");
      g.name = c.ident("grammar name");
      header = true;
    } else if (!header) {
      c.fail("expected 'grammar <name>' header before '" + keyword + "'");
    } else if (parse_common_directive(keyword, c, g.start, g.nonterminals, g.terminals, g.entering)) {
    } else if (keyword == "prod") {
      Production p;
      p.name = c.ident("production name");
      c.expect(":");
      p.lhs = c.ident("lhs label");
      c.expect("->");
      bool has_ext = false;
      std::size_t index = 0;
      while (!c.at_end()) {
        const std::string label = c.ident("rhs label or 'ext'");
        if (label == "ext" && c.peek_is("(")) {
          if (has_ext) c.fail("duplicate ext(...) in production " + p.name);
          p.rhs.set_externals(detail::node_list(c));
          has_ext = true;
          continue;
        }
        if (has_ext) c.fail("edges must precede ext(...) in production " + p.name);
        p.rhs.add_edge(Edge{"e" + std::to_string(++index), label, detail::node_list(c)});
      }
      g.productions.push_back(std::move(p));
    } else {
      c.fail("unknown directive '" + keyword + "'");
    }
    c.expect_end();
  }
  if (!header) throw SyntaxError(0, "missing 'grammar <name>' header");
  resolve_origins(g.productions);
  return g;
}

Hrg read_grammar_file(const std::filesystem::path& path) {
  return parse_grammar(read_text_file(path));
}

std::string write_grammar(const Hrg& g) {
  std::ostringstream out;
  out << "grammar " << g.name << '\n';
  out << detail::write_label_directives(g.start, g.nonterminals, g.terminals, g.entering);
  for (const auto& p : g.productions) {
    out << "prod " << p.name << ": " << p.lhs << " ->";
    for (const auto& e : p.rhs.edges()) {
      out << ' ' << e.label << '(' << detail::join(e.attachments, ", ") << ')';
    }
    out << " ext(" << detail::join(p.rhs.externals(), ", ") << ")\n";
  }
  return out.str();
}

}  // namespace hrgpg
