#include "hrgpg/plr.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "hrgpg/errors.hpp"
#include "hrgpg/transform.hpp"

namespace hrgpg {

std::string_view to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::ShiftReduce: return "shift/reduce";
    case ConflictKind::ReduceReduce: return "reduce/reduce";
    case ConflictKind::ShiftShift: return "shift/shift";
    case ConflictKind::UnanchoredFetch: return "unanchored fetch";
    case ConflictKind::AcceptReduce: return "accept/reduce";
  }
  return "unknown";
}

namespace {

// Label right of the dot, or nullptr at the end.
const std::string* dotted_label(const PositionalGrammar& pg, const Item& item) {
  if (item.production == kAugmented) return item.dot == 0 ? &pg.start : nullptr;
  const auto& elements = pg.productions[item.production].body.elements;
  return item.dot < elements.size() ? &elements[item.dot].label : nullptr;
}

// Leftmost-element interface sharing a node with lhs interface `lhs_interface`.
std::optional<int> leftmost_tie(const PositionalProduction& q, const InterfaceClasses& classes,
                                int lhs_interface) {
  if (lhs_interface < 1 || static_cast<std::size_t>(lhs_interface) > q.external_map.size()) {
    return std::nullopt;
  }
  const auto cls = classes.class_of(q.external_map[static_cast<std::size_t>(lhs_interface - 1)]);
  for (const auto& r : classes.members(cls)) {
    if (r.element == 0) return r.interface;
  }
  return std::nullopt;
}

class Closer {
 public:
  explicit Closer(const PositionalGrammar& pg) : pg_(pg) {
    for (const auto& p : pg.productions) classes_.emplace_back(p.body);
  }

  ItemSet operator()(ItemSet items) const {
    std::set<Item> result(items.begin(), items.end());
    std::deque<Item> work(result.begin(), result.end());
    while (!work.empty()) {
      const Item item = work.front();
      work.pop_front();
      const std::string* label = dotted_label(pg_, item);
      if (label == nullptr || !pg_.is_nonterminal(*label)) continue;
      for (std::size_t q = 0; q < pg_.productions.size(); ++q) {
        const auto& prod = pg_.productions[q];
        if (prod.lhs != *label) continue;
        Item next{q, 0, {}};
        for (const auto& c : item.context) {
          if (c.distance < 0) continue;  // checked when the production is reduced
          if (auto tie = leftmost_tie(prod, classes_[q], c.target_interface)) {
            next.context.push_back({c.source_interface, c.distance, *tie});
          }
        }
        canonicalize(next.context);
        if (result.insert(next).second) work.push_back(std::move(next));
      }
    }
    return {result.begin(), result.end()};
  }

 private:
  const PositionalGrammar& pg_;
  std::vector<InterfaceClasses> classes_;
};

Item advance(const PositionalGrammar& pg, const Item& item) {
  Item next{item.production, item.dot + 1, {}};
  if (item.production != kAugmented) {
    const auto& elements = pg.productions[item.production].body.elements;
    if (next.dot < elements.size()) next.context = elements[next.dot].conjunction;
  }
  return next;
}

ProductionShape shape_of(const PositionalProduction& p) {
  const InterfaceClasses classes(p.body);
  ProductionShape shape;
  for (std::size_t e = 0; e < p.body.elements.size(); ++e) {
    std::vector<std::size_t> row;
    for (int k = 1; k <= p.body.elements[e].arity; ++k) row.push_back(classes.class_of({e, k}));
    shape.interface_class.push_back(std::move(row));
  }
  shape.class_is_external.assign(classes.class_count(), false);
  for (const auto& ref : p.external_map) {
    const auto cls = classes.class_of(ref);
    shape.external_class.push_back(cls);
    shape.class_is_external[cls] = true;
  }
  return shape;
}

void require_normal_form(const PositionalGrammar& pg) {
  std::vector<std::string> problems;
  for (const auto& p : pg.productions) {
    if (p.body.elements.empty()) {
      problems.push_back(p.name + ": empty rhs");
      continue;
    }
    for (const auto& e : p.body.elements) {
      if (!pg.is_nonterminal(e.label) && !pg.terminals.contains(e.label)) {
        problems.push_back(p.name + ": undeclared label " + e.label);
      }
    }
    const auto wf = is_well_formed(p, pg.entering_of(p.lhs));
    problems.insert(problems.end(), wf.diagnostics.begin(), wf.diagnostics.end());
    if (!is_chain_connected(p.body)) problems.push_back(p.name + ": not chain-connected");
  }
  if (!problems.empty()) {
    std::string text = "grammar is not in parser normal form";
    for (const auto& line : problems) text += "\n  " + line;
    throw DomainError(text);
  }
}

std::string describe_shift(const ShiftAction& s, const Notation& n) {
  std::string out = "shift " + s.label;
  if (!s.fetch.empty()) out += " " + format_conjunction(s.fetch, n);
  return out;
}

class ConflictFinder {
 public:
  explicit ConflictFinder(ParseTable& table) : t_(table) {
    back_.resize(t_.states.size());
    for (std::size_t s = 0; s < t_.states.size(); ++s) {
      for (const auto& [label, target] : t_.states[s].gotos) back_[target].insert(s);
    }
  }

  void run() {
    const Notation n;
    for (std::size_t s = 0; s < t_.states.size(); ++s) {
      const State& st = t_.states[s];
      auto report = [&](ConflictKind kind, std::string detail) {
        t_.conflicts.push_back({s, kind, std::move(detail)});
      };
      if (st.reduces.size() > 1) {
        std::string names;
        for (auto r : st.reduces) names += (names.empty() ? "" : " vs ") + name(r);
        report(ConflictKind::ReduceReduce, "reduce " + names);
      }
      if (st.accept && !st.reduces.empty()) {
        report(ConflictKind::AcceptReduce, "accept vs reduce " + name(st.reduces.front()));
      }
      std::map<std::string, std::size_t> per_label;
      for (const auto& sh : st.shifts) {
        if (++per_label[sh.label] == 2) {
          report(ConflictKind::ShiftShift, "two fetch conditions for label " + sh.label);
        }
        const bool anchored = std::any_of(sh.fetch.begin(), sh.fetch.end(),
                                          [](const Connector& c) { return c.distance >= 0; });
        if (s != 0 && !anchored) {
          report(ConflictKind::UnanchoredFetch, describe_shift(sh, n) + " has no connector into the stack");
        }
      }
      for (auto r : st.reduces) {
        for (const auto& sh : st.shifts) {
          if (!resolved(s, r, sh)) {
            report(ConflictKind::ShiftReduce, describe_shift(sh, n) + " vs reduce " + name(r));
          }
        }
      }
    }
  }

 private:
  std::string name(std::size_t production) const { return t_.grammar.productions[production].name; }

  // A fetchable shift is safe to prefer over reducing r when either the fetch
  // reaches a node internal to r (saturated at reduce time, so no edge of the
  // input can satisfy it once r would be right), or r rewrites to the start
  // symbol and every path back leads to the accept-only state.
  bool resolved(std::size_t s, std::size_t r, const ShiftAction& sh) const {
    const auto& shape = t_.shapes[r];
    const std::size_t len = t_.grammar.productions[r].size();
    for (const auto& c : sh.fetch) {
      if (c.distance < 0 || static_cast<std::size_t>(c.distance) >= len) continue;
      const std::size_t element = len - 1 - static_cast<std::size_t>(c.distance);
      const std::size_t cls = shape.interface_class[element][static_cast<std::size_t>(c.source_interface - 1)];
      if (!shape.class_is_external[cls]) return true;
    }
    if (t_.grammar.productions[r].lhs != t_.grammar.start) return false;
    std::set<std::size_t> frontier{s};
    for (std::size_t step = 0; step < len; ++step) {
      std::set<std::size_t> prev;
      for (auto x : frontier) prev.insert(back_[x].begin(), back_[x].end());
      frontier = std::move(prev);
    }
    if (frontier.empty()) return false;
    for (auto p : frontier) {
      auto it = t_.states[p].gotos.find(t_.grammar.start);
      if (it == t_.states[p].gotos.end()) return false;
      const State& target = t_.states[it->second];
      if (!target.accept || target.items.size() != 1 || !target.shifts.empty()) return false;
    }
    return true;
  }

  ParseTable& t_;
  std::vector<std::set<std::size_t>> back_;
};

}  // namespace

ItemSet closure(const PositionalGrammar& pg, ItemSet items) { return Closer(pg)(std::move(items)); }

ParseTable build_table(const PositionalGrammar& pg) {
  require_normal_form(pg);
  ParseTable table;
  table.grammar = pg;
  for (const auto& p : pg.productions) table.shapes.push_back(shape_of(p));

  const Closer close(pg);
  std::map<ItemSet, std::size_t> index;
  auto intern = [&](ItemSet items) {
    auto [it, fresh] = index.emplace(items, table.states.size());
    if (fresh) table.states.push_back(State{std::move(items), {}, {}, {}, false});
    return it->second;
  };
  intern(close({Item{kAugmented, 0, {}}}));

  for (std::size_t s = 0; s < table.states.size(); ++s) {
    std::vector<std::string> labels;
    for (const auto& item : table.states[s].items) {
      const std::string* label = dotted_label(pg, item);
      if (label == nullptr) {
        if (item.production == kAugmented) {
          table.states[s].accept = true;
        } else {
          table.states[s].reduces.push_back(item.production);
        }
      } else if (std::find(labels.begin(), labels.end(), *label) == labels.end()) {
        labels.push_back(*label);
      }
    }
    for (const auto& label : labels) {
      ItemSet kernel;
      std::vector<std::vector<Connector>> fetches;
      for (const auto& item : table.states[s].items) {
        const std::string* l = dotted_label(pg, item);
        if (l == nullptr || *l != label) continue;
        kernel.push_back(advance(pg, item));
        if (std::find(fetches.begin(), fetches.end(), item.context) == fetches.end()) {
          fetches.push_back(item.context);
        }
      }
      std::sort(kernel.begin(), kernel.end());
      const std::size_t target = intern(close(std::move(kernel)));
      State& st = table.states[s];  // intern may have reallocated
      st.gotos[label] = target;
      if (!pg.is_nonterminal(label)) {
        for (auto& f : fetches) st.shifts.push_back({label, std::move(f), target});
      }
    }
  }

  ConflictFinder(table).run();
  return table;
}

std::string format_item(const PositionalGrammar& pg, const Item& item, const Notation& n) {
  const char* arrow = n.unicode ? " ⇒ " : " => ";
  const char* dot = n.unicode ? "•" : ".";
  if (item.production == kAugmented) {
    return pg.start + "'" + arrow + (item.dot == 0 ? std::string(dot) + " " + pg.start : pg.start + " " + dot);
  }
  const auto& p = pg.productions[item.production];
  std::string out = p.lhs + arrow;
  for (std::size_t i = 0; i < p.body.elements.size(); ++i) {
    if (i == item.dot) out += std::string(dot) + " ";
    const auto& el = p.body.elements[i];
    if (!el.conjunction.empty()) out += format_conjunction(el.conjunction, n) + " ";
    out += el.label;
    if (i + 1 < p.body.elements.size()) out += " ";
  }
  if (item.dot == p.body.elements.size()) out += std::string(" ") + dot;
  if (item.dot == 0 && !item.context.empty()) out += "   [fetch " + format_conjunction(item.context, n) + "]";
  return out;
}

std::string format_table(const ParseTable& table, const Notation& n) {
  std::ostringstream out;
  const char* arrow = n.unicode ? " → " : " -> ";
  out << "states " << table.states.size() << '\n';
  for (std::size_t s = 0; s < table.states.size(); ++s) {
    const State& st = table.states[s];
    out << "\nstate " << s << '\n';
    for (const auto& item : st.items) out << "  " << format_item(table.grammar, item, n) << '\n';
    for (const auto& sh : st.shifts) out << "  " << describe_shift(sh, n) << arrow << sh.target << '\n';
    for (const auto& [label, target] : st.gotos) {
      if (table.grammar.is_nonterminal(label)) out << "  goto " << label << arrow << target << '\n';
    }
    for (auto r : st.reduces) out << "  reduce " << table.grammar.productions[r].name << '\n';
    if (st.accept) out << "  accept\n";
  }
  out << '\n';
  if (table.conflicts.empty()) {
    out << "conflicts: none\n";
  } else {
    out << "conflicts: " << table.conflicts.size() << '\n';
    for (const auto& c : table.conflicts) {
      out << "  state " << c.state << ": " << to_string(c.kind) << ": " << c.detail << '\n';
    }
  }
  return out.str();
}

}  // namespace hrgpg
