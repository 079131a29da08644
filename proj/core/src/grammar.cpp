#include "hrgpg/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "hrgpg/errors.hpp"

namespace hrgpg {

LabelSet Hrg::labels() const {
  LabelSet all = terminals;
  all.insert(nonterminals.begin(), nonterminals.end());
  return all;
}

std::vector<int> Hrg::entering_of(std::string_view nonterminal) const {
  auto it = entering.find(nonterminal);
  if (it == entering.end()) return {1};
  return it->second;
}

const Production* Hrg::find(std::string_view production) const {
  for (const auto& p : productions) {
    if (p.name == production) return &p;
  }
  return nullptr;
}

Hrg Hrg::without_duplicates() const {
  Hrg g = *this;
  std::erase_if(g.productions, [](const Production& p) { return p.is_duplicate(); });
  return g;
}

ValidationReport validate_grammar(const Hrg& g) {
  ValidationReport out;
  for (const auto& [name, arity] : g.nonterminals) {
    if (g.terminals.contains(name)) {
      out.push_back({ViolationKind::LabelInBothSets, name, "label '" + name + "' is both terminal and non-terminal"});
    }
  }
  for (const auto& [name, arity] : g.labels()) {
    if (arity < 1) {
      out.push_back({ViolationKind::ZeroArityLabel, name, "label '" + name + "' has type 0"});
    }
  }
  if (g.start.empty() || !g.labels().contains(g.start)) {
    out.push_back({ViolationKind::UndeclaredStart, g.start, "start symbol '" + g.start + "' is not declared"});
  } else if (!g.nonterminals.contains(g.start)) {
    out.push_back({ViolationKind::StartNotNonterminal, g.start, "start symbol '" + g.start + "' is not a non-terminal"});
  }
  for (const auto& [name, interfaces] : g.entering) {
    auto it = g.nonterminals.find(name);
    const int arity = it == g.nonterminals.end() ? 0 : it->second;
    for (int i : interfaces) {
      if (i < 1 || i > arity) {
        out.push_back({ViolationKind::EnteringOutOfRange, name,
                       "entering interface " + std::to_string(i) + " of '" + name + "' outside 1.." + std::to_string(arity)});
      }
    }
  }

  const LabelSet labels = g.labels();
  std::set<std::string> names;
  for (const auto& p : g.productions) {
    if (!names.insert(p.name).second) {
      out.push_back({ViolationKind::DuplicateProductionName, p.name, "production name '" + p.name + "' used twice"});
    }
    auto lhs = g.nonterminals.find(p.lhs);
    if (lhs == g.nonterminals.end()) {
      out.push_back({ViolationKind::LhsNotNonterminal, p.name, "lhs '" + p.lhs + "' of " + p.name + " is not a non-terminal"});
    } else if (type_of(p.rhs) != static_cast<std::size_t>(lhs->second)) {
      out.push_back({ViolationKind::TypeMismatch, p.name,
                     p.name + ": rhs has type " + std::to_string(type_of(p.rhs)) + ", lhs '" + p.lhs +
                         "' has type " + std::to_string(lhs->second)});
    }
    const auto rhs_report = validate(p.rhs, labels);
    for (const auto& v : rhs_report) {
      out.push_back({v.kind, p.name + ":" + v.subject, p.name + ": " + v.message});
    }
    if (p.rhs.edge_count() == 0) {
      out.push_back({ViolationKind::RhsInvalid, p.name, p.name + ": rhs has no edges"});
    } else if (!is_connected(p.rhs)) {
      out.push_back({ViolationKind::RhsDisconnected, p.name, p.name + ": rhs not connected"});
    }
  }
  return out;
}

Hypergraph start_graph(const Hrg& g) {
  auto it = g.nonterminals.find(g.start);
  if (it == g.nonterminals.end()) throw DomainError("start symbol '" + g.start + "' is not a non-terminal");
  Edge e{"s", g.start, {}};
  for (int i = 1; i <= it->second; ++i) e.attachments.push_back("n" + std::to_string(i));
  return Hypergraph({e});
}

namespace {

// Smallest k such that no node "n<j>" with j >= k exists in h.
std::size_t next_fresh_index(const Hypergraph& h) {
  std::size_t next = 1;
  for (const auto& n : h.nodes()) {
    if (n.size() < 2 || n[0] != 'n') continue;
    bool digits = true;
    for (std::size_t i = 1; i < n.size(); ++i) digits &= std::isdigit(static_cast<unsigned char>(n[i])) != 0;
    if (!digits) continue;
    next = std::max(next, static_cast<std::size_t>(std::stoull(n.substr(1))) + 1);
  }
  return next;
}

}  // namespace

Hypergraph derive_step(const Hypergraph& host, std::size_t edge_index, const Production& p) {
  if (edge_index >= host.edge_count()) throw DomainError("derive_step: edge index out of range");
  const Edge& replaced = host.edges()[edge_index];
  if (replaced.label != p.lhs) {
    throw DomainError("derive_step: edge '" + replaced.id + "' is labelled '" + replaced.label +
                      "', production " + p.name + " rewrites '" + p.lhs + "'");
  }
  if (replaced.attachments.size() != type_of(p.rhs)) {
    throw DomainError("derive_step: edge '" + replaced.id + "' has " +
                      std::to_string(replaced.attachments.size()) + " attachments, rhs of " + p.name +
                      " has type " + std::to_string(type_of(p.rhs)));
  }

  std::map<std::string, std::string> image;
  for (std::size_t i = 0; i < p.rhs.externals().size(); ++i) {
    image.emplace(p.rhs.externals()[i], replaced.attachments[i]);
  }
  std::size_t fresh = next_fresh_index(host);
  for (const auto& n : p.rhs.nodes()) {
    if (!image.contains(n)) image.emplace(n, "n" + std::to_string(fresh++));
  }

  Hypergraph out;
  for (const auto& n : host.nodes()) out.add_node(n);
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    if (i != edge_index) {
      out.add_edge(host.edges()[i]);
      continue;
    }
    for (std::size_t k = 0; k < p.rhs.edge_count(); ++k) {
      const Edge& r = p.rhs.edges()[k];
      Edge copy{replaced.id + "." + std::to_string(k + 1), r.label, {}};
      for (const auto& a : r.attachments) copy.attachments.push_back(image.at(a));
      out.add_edge(std::move(copy));
    }
  }
  out.set_externals(host.externals());
  return out;
}

Hypergraph derive_step(const Hypergraph& host, std::string_view edge_id, const Production& p) {
  auto index = host.edge_index(edge_id);
  if (!index) throw DomainError("derive_step: no edge '" + std::string(edge_id) + "'");
  return derive_step(host, *index, p);
}

}  // namespace hrgpg
