#include "hrgpg/positional.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hrgpg/errors.hpp"
#include "text.hpp"

namespace hrgpg {

Connector canonical(Connector c) {
  if (c.is_self() && c.source_interface > c.target_interface) {
    std::swap(c.source_interface, c.target_interface);
  }
  return c;
}

void canonicalize(std::vector<Connector>& conjunction) {
  for (auto& c : conjunction) c = canonical(c);
  std::sort(conjunction.begin(), conjunction.end(), [](const Connector& a, const Connector& b) {
    if (a.distance != b.distance) return a.distance > b.distance;
    if (a.source_interface != b.source_interface) return a.source_interface < b.source_interface;
    return a.target_interface < b.target_interface;
  });
  conjunction.erase(std::unique(conjunction.begin(), conjunction.end()), conjunction.end());
}

std::vector<int> PositionalGrammar::entering_of(std::string_view nonterminal) const {
  auto it = entering.find(nonterminal);
  if (it == entering.end()) return {1};
  return it->second;
}

namespace {

std::string ref_name(const PositionalString& s, InterfaceRef r) {
  if (r.element < s.elements.size()) return format_interface_ref(s, r);
  return "#" + std::to_string(r.element + 1) + "." + std::to_string(r.interface);
}

// Source element of a connector targeting element `target`, if it resolves.
std::optional<std::size_t> source_of(std::size_t target, const Connector& c) {
  if (c.distance < -1) return std::nullopt;
  if (c.is_self()) return target;
  const long source = static_cast<long>(target) - 1 - c.distance;
  if (source < 0) return std::nullopt;
  return static_cast<std::size_t>(source);
}

void check_connector(const PositionalString& s, std::size_t target, const Connector& c) {
  const auto source = source_of(target, c);
  const Element& t = s.elements[target];
  auto describe = [&] {
    return format_connector(c, {false, false}) + " before element " + std::to_string(target + 1) +
           " (" + t.label + ")";
  };
  if (!source) throw DomainError("dangling connector " + describe());
  const Element& src = s.elements[*source];
  if (c.source_interface < 1 || c.source_interface > src.arity || c.target_interface < 1 ||
      c.target_interface > t.arity) {
    throw DomainError("connector interface out of range: " + describe());
  }
  if (c.is_self() && c.source_interface == c.target_interface) {
    throw DomainError("self connector relates an interface to itself: " + describe());
  }
}

struct Synthesis {
  PositionalString body;
  std::map<std::string, InterfaceRef> first;
};

Synthesis synthesize(const Hypergraph& h, std::span<const std::size_t> order) {
  Synthesis out;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const Edge& e = h.edges()[order[idx]];
    Element el{{}, e.label, static_cast<int>(e.attachments.size()), e.id};
    for (std::size_t j = 0; j < e.attachments.size(); ++j) {
      const int iface = static_cast<int>(j) + 1;
      auto [it, fresh] = out.first.emplace(e.attachments[j], InterfaceRef{idx, iface});
      if (fresh) continue;
      const InterfaceRef src = it->second;
      const int distance = src.element == idx ? -1 : static_cast<int>(idx - src.element - 1);
      el.conjunction.push_back({src.interface, distance, iface});
    }
    canonicalize(el.conjunction);
    out.body.elements.push_back(std::move(el));
  }
  const std::set<std::string> external(h.externals().begin(), h.externals().end());
  for (const auto& [node, ref] : out.first) {
    if (!external.contains(node) && h.degree(node) == 1) out.body.unary.push_back(ref);
  }
  std::sort(out.body.unary.begin(), out.body.unary.end());
  return out;
}

void require_structure(const Hypergraph& h, const std::string& what) {
  for (const auto& v : validate(h)) {
    throw DomainError(what + ": " + v.message);
  }
  if (h.edge_count() == 0) throw DomainError(what + ": no edges");
  if (!is_connected(h)) throw DomainError(what + ": rhs not connected");
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

InterfaceClasses::InterfaceClasses(const PositionalString& s) {
  std::size_t slots = 0;
  for (const auto& e : s.elements) {
    offset_.push_back(slots);
    slots += static_cast<std::size_t>(std::max(e.arity, 0));
  }
  std::vector<std::size_t> parent(slots);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t t = 0; t < s.elements.size(); ++t) {
    for (const auto& c : s.elements[t].conjunction) {
      check_connector(s, t, c);
      const std::size_t source = *source_of(t, c);
      const std::size_t a = find(offset_[source] + static_cast<std::size_t>(c.source_interface - 1));
      const std::size_t b = find(offset_[t] + static_cast<std::size_t>(c.target_interface - 1));
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  class_.resize(slots);
  std::map<std::size_t, std::size_t> dense;
  for (std::size_t i = 0; i < slots; ++i) {
    auto [it, fresh] = dense.emplace(find(i), dense.size());
    class_[i] = it->second;
  }
  count_ = dense.size();
}

std::size_t InterfaceClasses::class_of(InterfaceRef ref) const {
  return class_.at(offset_.at(ref.element) + static_cast<std::size_t>(ref.interface - 1));
}

std::vector<InterfaceRef> InterfaceClasses::members(std::size_t cls) const {
  std::vector<InterfaceRef> out;
  for (std::size_t e = 0; e < offset_.size(); ++e) {
    const std::size_t end = e + 1 < offset_.size() ? offset_[e + 1] : class_.size();
    for (std::size_t slot = offset_[e]; slot < end; ++slot) {
      if (class_[slot] == cls) out.push_back({e, static_cast<int>(slot - offset_[e] + 1)});
    }
  }
  return out;
}

PositionalProduction translate_production(const Production& p) {
  require_structure(p.rhs, "production " + p.name);
  const auto order = identity(p.rhs.edge_count());
  Synthesis syn = synthesize(p.rhs, order);
  PositionalProduction out;
  out.name = p.name;
  out.lhs = p.lhs;
  out.origin = p.origin;
  out.body = std::move(syn.body);
  for (const auto& x : p.rhs.externals()) out.external_map.push_back(syn.first.at(x));
  return out;
}

PositionalString translate_graph(const Hypergraph& h, std::span<const std::size_t> order) {
  require_structure(h, "graph");
  std::vector<std::size_t> ord(order.begin(), order.end());
  if (ord.empty()) ord = identity(h.edge_count());
  std::vector<std::size_t> check = ord;
  std::sort(check.begin(), check.end());
  if (check != identity(h.edge_count())) throw DomainError("order is not a permutation of the edges");
  Synthesis syn = synthesize(h, ord);
  if (!is_chain_connected(syn.body)) {
    throw DomainError("order breaks chain connectivity: some element shares no node with earlier ones");
  }
  return syn.body;
}

PositionalGrammar translate_grammar(const Hrg& g) {
  const auto report = validate_grammar(g);
  if (!report.empty()) throw DomainError(report.front().message);
  PositionalGrammar pg;
  pg.name = g.name;
  pg.nonterminals = g.nonterminals;
  pg.terminals = g.terminals;
  pg.start = g.start;
  pg.entering = g.entering;
  for (const auto& p : g.productions) pg.productions.push_back(translate_production(p));
  return pg;
}

bool is_chain_connected(const PositionalString& s) {
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const auto& conj = s.elements[i].conjunction;
    const bool reaches_back =
        std::any_of(conj.begin(), conj.end(), [](const Connector& c) { return c.distance >= 0; });
    if (reaches_back != (i > 0)) return false;
  }
  return true;
}

namespace {

Hypergraph realize_with(const PositionalString& s, std::span<const InterfaceRef> external_map) {
  const InterfaceClasses classes(s);
  std::set<std::size_t> external_classes;
  for (const auto& ref : external_map) {
    if (ref.element >= s.elements.size() || ref.interface < 1 ||
        ref.interface > s.elements[ref.element].arity) {
      throw DomainError("external map points outside the rhs: " + ref_name(s, ref));
    }
    if (!external_classes.insert(classes.class_of(ref)).second) {
      throw DomainError("two external interfaces resolve to one node at " + ref_name(s, ref));
    }
  }
  for (const auto& ref : s.unary) {
    if (ref.element >= s.elements.size() || ref.interface < 1 ||
        ref.interface > s.elements[ref.element].arity) {
      throw DomainError("unary interface outside the string: " + ref_name(s, ref));
    }
    const std::size_t cls = classes.class_of(ref);
    if (classes.members(cls).size() > 1 || external_classes.contains(cls)) {
      throw DomainError("uniqueness violated: interface " + ref_name(s, ref) +
                        " is declared unary but also shares a node");
    }
  }
  Hypergraph out;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const Element& el = s.elements[i];
    Edge e{el.instance.empty() ? "e" + std::to_string(i + 1) : el.instance, el.label, {}};
    for (int k = 1; k <= el.arity; ++k) {
      e.attachments.push_back("v" + std::to_string(classes.class_of({i, k}) + 1));
    }
    out.add_edge(std::move(e));
  }
  std::vector<std::string> ext;
  for (const auto& ref : external_map) ext.push_back("v" + std::to_string(classes.class_of(ref) + 1));
  out.set_externals(std::move(ext));
  return out;
}

}  // namespace

Hypergraph realize(const PositionalString& s) { return realize_with(s, {}); }

Hypergraph realize(const PositionalProduction& p) { return realize_with(p.body, p.external_map); }

Production realize_production(const PositionalProduction& p) {
  return Production{p.name, p.lhs, realize(p), p.origin};
}

Hrg realize_grammar(const PositionalGrammar& pg) {
  Hrg g;
  g.name = pg.name;
  g.nonterminals = pg.nonterminals;
  g.terminals = pg.terminals;
  g.start = pg.start;
  g.entering = pg.entering;
  for (const auto& p : pg.productions) g.productions.push_back(realize_production(p));
  return g;
}

AxiomReport check_relation_axioms(const PositionalString& s,
                                  std::span<const InterfaceRef> external_map) {
  AxiomReport report;
  auto issue = [&](std::string text) { report.issues.push_back(std::move(text)); };

  std::vector<std::size_t> offset;
  std::vector<InterfaceRef> slot_ref;
  for (std::size_t e = 0; e < s.elements.size(); ++e) {
    offset.push_back(slot_ref.size());
    for (int k = 1; k <= s.elements[e].arity; ++k) slot_ref.push_back({e, k});
  }
  const std::size_t n = slot_ref.size();
  auto slot = [&](InterfaceRef r) { return offset[r.element] + static_cast<std::size_t>(r.interface - 1); };

  // Direct relation from the connectors, made symmetric.
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  std::vector<bool> binary(n, false);
  for (std::size_t t = 0; t < s.elements.size(); ++t) {
    for (const auto& c : s.elements[t].conjunction) {
      try {
        check_connector(s, t, c);
      } catch (const DomainError& e) {
        issue(e.what());
        continue;
      }
      const std::size_t a = slot({*source_of(t, c), c.source_interface});
      const std::size_t b = slot({t, c.target_interface});
      rel[a][b] = rel[b][a] = true;
      binary[a] = binary[b] = true;
    }
  }
  if (!report.ok()) return report;

  std::set<std::size_t> unary;
  for (const auto& r : s.unary) {
    if (r.element >= s.elements.size() || r.interface < 1 || r.interface > s.elements[r.element].arity) {
      issue("unary interface outside the string: " + ref_name(s, r));
      continue;
    }
    unary.insert(slot(r));
  }
  std::vector<bool> tied(n, false);
  for (const auto& r : external_map) {
    if (r.element >= s.elements.size() || r.interface < 1 || r.interface > s.elements[r.element].arity) {
      issue("external map points outside the rhs: " + ref_name(s, r));
      continue;
    }
    tied[slot(r)] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const bool shares = binary[i] || tied[i];
    if (shares && unary.contains(i)) {
      issue("uniqueness: interface " + ref_name(s, slot_ref[i]) + " is both shared and unary");
    } else if (!shares && !unary.contains(i)) {
      issue("uniqueness: interface " + ref_name(s, slot_ref[i]) + " takes part in no relation");
    }
  }

  // Symmetric-transitive closure (Warshall), kept apart from the union-find
  // used by realize().
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }

  Hypergraph realized;
  try {
    realized = realize_with(s, external_map);
  } catch (const DomainError& e) {
    issue(e.what());
    return report;
  }
  std::vector<std::string> node_of(n);
  for (std::size_t e = 0; e < realized.edge_count(); ++e) {
    for (std::size_t k = 0; k < realized.edges()[e].attachments.size(); ++k) {
      node_of[offset[e] + k] = realized.edges()[e].attachments[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool shares = node_of[i] == node_of[j];
      if (shares != rel[i][j]) {
        issue("closure mismatch between " + ref_name(s, slot_ref[i]) + " and " + ref_name(s, slot_ref[j]));
      }
    }
  }
  return report;
}

AxiomReport check_relation_axioms(const PositionalProduction& p) {
  return check_relation_axioms(p.body, p.external_map);
}

std::string format_connector(const Connector& c, const Notation& n) {
  std::ostringstream out;
  out << (n.unicode ? "⟨" : "<") << c.source_interface << ',';
  if (!(n.omit_zero_distance && c.distance == 0)) {
    if (c.distance < 0) {
      out << (n.unicode ? "−" : "-") << -c.distance;
    } else {
      out << c.distance;
    }
    out << ',';
  }
  out << c.target_interface << (n.unicode ? "⟩" : ">");
  return out.str();
}

std::string format_conjunction(const std::vector<Connector>& conjunction, const Notation& n) {
  std::string out;
  for (std::size_t i = 0; i < conjunction.size(); ++i) {
    if (i) out += n.unicode ? "∧" : "&";
    out += format_connector(conjunction[i], n);
  }
  return out;
}

std::string format_string(const PositionalString& s, const Notation& n) {
  std::string out;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    if (i) out += ' ';
    const auto& el = s.elements[i];
    if (!el.conjunction.empty()) out += format_conjunction(el.conjunction, n) + ' ';
    out += el.label;
  }
  return out;
}

std::string format_interface_ref(const PositionalString& s, InterfaceRef ref) {
  const std::string& label = s.elements.at(ref.element).label;
  const auto count = std::count_if(s.elements.begin(), s.elements.end(),
                                   [&](const Element& e) { return e.label == label; });
  if (count == 1) return label + std::to_string(ref.interface);
  return label + "[" + std::to_string(ref.element + 1) + "]" + std::to_string(ref.interface);
}

std::string format_production(const PositionalProduction& p, const Notation& n) {
  std::string out = p.lhs + (n.unicode ? " ⇒ " : " => ") + format_string(p.body, n);
  if (!p.external_map.empty()) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < p.external_map.size(); ++i) {
      parts.push_back(p.lhs + std::to_string(i + 1) + "=" + format_interface_ref(p.body, p.external_map[i]));
    }
    out += " (" + detail::join(parts, ", ") + ")";
  }
  return out;
}

}  // namespace hrgpg
