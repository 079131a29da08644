#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hrgpg/errors.hpp"
#include "hrgpg/positional.hpp"
#include "text.hpp"

namespace hrgpg {

using detail::Cursor;

namespace {

Connector parse_connector(Cursor& c) {
  c.expect("<");
  std::vector<int> parts{c.integer("connector interface")};
  while (c.accept(",")) parts.push_back(c.integer("connector field"));
  c.expect(">");
  if (parts.size() == 2) return {parts[0], 0, parts[1]};
  if (parts.size() == 3) return {parts[0], parts[1], parts[2]};
  c.fail("connector needs 2 or 3 fields");
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
  });
}

// "a2" or "a[3]2".
InterfaceRef parse_ref(Cursor& c, const PositionalString& body) {
  const std::string head = c.ident("interface reference");
  if (c.accept("[")) {
    const int element = c.integer("element position");
    c.expect("]");
    const int iface = c.integer("interface");
    if (element < 1 || static_cast<std::size_t>(element) > body.elements.size() ||
        body.elements[static_cast<std::size_t>(element - 1)].label != head) {
      c.fail("no element " + std::to_string(element) + " labelled '" + head + "'");
    }
    return {static_cast<std::size_t>(element - 1), iface};
  }
  std::size_t best_len = 0;
  std::optional<InterfaceRef> best;
  int matches = 0;
  for (std::size_t i = 0; i < body.elements.size(); ++i) {
    const std::string& label = body.elements[i].label;
    if (label.size() >= head.size() || head.compare(0, label.size(), label) != 0) continue;
    if (!all_digits(std::string_view(head).substr(label.size()))) continue;
    if (label.size() > best_len) {
      best_len = label.size();
      best = InterfaceRef{i, std::stoi(head.substr(label.size()))};
      matches = 1;
    } else if (label.size() == best_len) {
      ++matches;
    }
  }
  if (!best) c.fail("'" + head + "' names no rhs element interface");
  if (matches > 1) c.fail("'" + head + "' is ambiguous; use <label>[<position>]<interface>");
  return *best;
}

PositionalProduction parse_pprod(Cursor& c, const LabelSet& labels) {
  PositionalProduction p;
  p.name = c.ident("production name");
  c.expect(":");
  p.lhs = c.ident("lhs label");
  c.expect("=>");
  while (!c.at_end() && !c.peek_is("(")) {
    Element el;
    if (c.peek_is("<")) {
      do {
        el.conjunction.push_back(parse_connector(c));
      } while (c.accept("&"));
    }
    el.label = c.ident("element label");
    auto it = labels.find(el.label);
    if (it == labels.end()) c.fail("undeclared label '" + el.label + "'");
    el.arity = it->second;
    canonicalize(el.conjunction);
    p.body.elements.push_back(std::move(el));
  }
  if (p.body.elements.empty()) c.fail("production " + p.name + " has no elements");
  std::vector<std::optional<InterfaceRef>> ext;
  if (c.accept("(")) {
    do {
      const std::string lhs_ref = c.ident("lhs interface");
      if (lhs_ref.size() <= p.lhs.size() || lhs_ref.compare(0, p.lhs.size(), p.lhs) != 0 ||
          !all_digits(std::string_view(lhs_ref).substr(p.lhs.size()))) {
        c.fail("expected " + p.lhs + "<interface>, found '" + lhs_ref + "'");
      }
      const int i = std::stoi(lhs_ref.substr(p.lhs.size()));
      c.expect("=");
      const InterfaceRef ref = parse_ref(c, p.body);
      if (i < 1) c.fail("lhs interface must be positive");
      if (ext.size() < static_cast<std::size_t>(i)) ext.resize(static_cast<std::size_t>(i));
      if (ext[static_cast<std::size_t>(i - 1)]) c.fail("lhs interface " + std::to_string(i) + " mapped twice");
      ext[static_cast<std::size_t>(i - 1)] = ref;
    } while (c.accept(","));
    c.expect(")");
  }
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (!ext[i]) c.fail("lhs interface " + std::to_string(i + 1) + " is not mapped");
    p.external_map.push_back(*ext[i]);
  }

  // Interfaces named by no connector and no external map are unary.
  std::set<InterfaceRef> mentioned(p.external_map.begin(), p.external_map.end());
  for (std::size_t t = 0; t < p.body.elements.size(); ++t) {
    for (const auto& conn : p.body.elements[t].conjunction) {
      mentioned.insert({t, conn.target_interface});
      const long source = conn.is_self() ? static_cast<long>(t) : static_cast<long>(t) - 1 - conn.distance;
      if (source >= 0) mentioned.insert({static_cast<std::size_t>(source), conn.source_interface});
    }
  }
  for (std::size_t t = 0; t < p.body.elements.size(); ++t) {
    for (int k = 1; k <= p.body.elements[t].arity; ++k) {
      if (!mentioned.contains({t, k})) p.body.unary.push_back({t, k});
    }
  }
  return p;
}

}  // namespace

PositionalGrammar parse_positional_grammar(std::string_view text) {
  PositionalGrammar pg;
  bool header = false;
  std::size_t line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    Cursor c(detail::tokenize(line, line_no), line_no);
    if (c.at_end()) continue;
    const std::string keyword = c.ident("directive");
    if (keyword == "pg") {
      if (header) c.fail("duplicate 'pg' header");
      pg.name = c.ident("grammar name");
      header = true;
    } else if (!header) {
      c.fail("expected 'pg <name>' header before '" + keyword + "'");
    } else if (detail::parse_label_directive(keyword, c, pg.start, pg.nonterminals, pg.terminals,
                                             pg.entering)) {
    } else if (keyword == "pprod") {
      LabelSet labels = pg.terminals;
      labels.insert(pg.nonterminals.begin(), pg.nonterminals.end());
      pg.productions.push_back(parse_pprod(c, labels));
    } else {
      c.fail("unknown directive '" + keyword + "'");
    }
    c.expect_end();
  }
  if (!header) throw SyntaxError(0, "missing 'pg <name>' header");
  for (auto& p : pg.productions) {
    const auto hash = p.name.rfind('#');
    if (hash == std::string::npos || hash == 0) continue;
    const std::string base = p.name.substr(0, hash);
    if (std::any_of(pg.productions.begin(), pg.productions.end(),
                    [&](const PositionalProduction& q) { return q.name == base; })) {
      p.origin = base;
    }
  }
  return pg;
}

std::string write_positional_grammar(const PositionalGrammar& pg) {
  std::ostringstream out;
  out << "pg " << pg.name << '\n';
  out << detail::write_label_directives(pg.start, pg.nonterminals, pg.terminals, pg.entering);
  const Notation ascii{false, false};
  for (const auto& p : pg.productions) {
    out << "pprod " << p.name << ": " << format_production(p, ascii) << '\n';
  }
  return out.str();
}

}  // namespace hrgpg
