#include "hrgpg/transform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hrgpg/errors.hpp"
#include "hrgpg/plr.hpp"

namespace hrgpg {

WellFormedness is_well_formed(const PositionalProduction& p, std::span<const int> entering) {
  WellFormedness out;
  const InterfaceClasses classes(p.body);
  const std::string& leftmost = p.body.elements.at(0).label;
  for (int i : entering) {
    if (i < 1 || static_cast<std::size_t>(i) > p.external_map.size()) {
      throw DomainError("entering interface " + std::to_string(i) + " of " + p.lhs +
                        " is outside 1.." + std::to_string(p.external_map.size()));
    }
    const auto members = classes.members(classes.class_of(p.external_map[static_cast<std::size_t>(i - 1)]));
    const bool tied = std::any_of(members.begin(), members.end(),
                                  [](const InterfaceRef& r) { return r.element == 0; });
    if (!tied) {
      out.ok = false;
      out.failing.push_back(i);
      out.diagnostics.push_back(p.name + ": entering interface " + std::to_string(i) +
                                " not tied to leftmost symbol " + leftmost);
    }
  }
  return out;
}

std::vector<Ordering> all_orderings(std::size_t n) {
  if (n > 8) {
    throw BudgetError("refusing to enumerate " + std::to_string(n) + "! orderings (limit 8 elements)");
  }
  Ordering o(n);
  std::iota(o.begin(), o.end(), std::size_t{0});
  std::vector<Ordering> out;
  do {
    out.push_back(o);
  } while (std::next_permutation(o.begin(), o.end()));
  return out;
}

Production simple_permute(const Production& p, std::span<const std::size_t> perm) {
  const std::size_t n = p.rhs.edge_count();
  std::vector<bool> seen(n, false);
  if (perm.size() != n) throw DomainError("ordering for " + p.name + " has wrong length");
  for (std::size_t i : perm) {
    if (i >= n || seen[i]) throw DomainError("ordering for " + p.name + " is not a bijection");
    seen[i] = true;
  }
  Production out{p.name, p.lhs, {}, p.origin};
  for (const auto& v : p.rhs.nodes()) out.rhs.add_node(v);
  for (std::size_t i : perm) out.rhs.add_edge(p.rhs.edges()[i]);
  out.rhs.set_externals(p.rhs.externals());
  return out;
}

std::string_view to_string(PermutationKind kind) {
  switch (kind) {
    case PermutationKind::Identity: return "identity";
    case PermutationKind::Simple: return "simple";
    case PermutationKind::Duplicated: return "duplicated";
  }
  return "unknown";
}

PermutationKind ProductionPlan::kind() const {
  if (orderings.size() > 1) return PermutationKind::Duplicated;
  if (orderings.empty()) return PermutationKind::Identity;
  const Ordering& o = orderings.front();
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (o[i] != i) return PermutationKind::Simple;
  }
  return PermutationKind::Identity;
}

std::size_t PermutationPlan::cost() const {
  std::size_t c = 0;
  for (const auto& e : entries) c += e.orderings.empty() ? 0 : e.orderings.size() - 1;
  return c;
}

std::string format_ordering(const Ordering& o) {
  std::string out = "(";
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(o[i] + 1);
  }
  return out + ")";
}

std::string format_plan(const PermutationPlan& plan) {
  std::ostringstream out;
  for (const auto& e : plan.entries) {
    out << e.production << ": " << to_string(e.kind());
    for (const auto& o : e.orderings) out << ' ' << format_ordering(o);
    out << '\n';
  }
  out << "cost " << plan.cost() << '\n';
  return out.str();
}

Hrg apply_plan(const Hrg& g, const PermutationPlan& plan) {
  std::map<std::string, const ProductionPlan*> by_name;
  for (const auto& e : plan.entries) by_name.emplace(e.production, &e);
  Hrg out = g;
  out.productions.clear();
  for (const auto& p : g.productions) {
    auto it = by_name.find(p.name);
    if (it == by_name.end() || it->second->orderings.empty()) {
      out.productions.push_back(p);
      continue;
    }
    const auto& orderings = it->second->orderings;
    for (std::size_t k = 0; k < orderings.size(); ++k) {
      Production copy = simple_permute(p, orderings[k]);
      if (k > 0) {
        copy.name = p.name + "#" + std::to_string(k + 1);
        copy.origin = p.name;
      }
      out.productions.push_back(std::move(copy));
    }
  }
  return out;
}

namespace {

struct Candidates {
  std::vector<Ordering> orderings;  // well-formed and chain-connected, lexicographic
  std::vector<std::string> rejections;
};

Candidates candidates_for(const Hrg& g, const Production& p) {
  Candidates out;
  const auto entering = g.entering_of(p.lhs);
  for (const auto& o : all_orderings(p.rhs.edge_count())) {
    const PositionalProduction pp = translate_production(simple_permute(p, o));
    const auto wf = is_well_formed(pp, entering);
    const bool chained = is_chain_connected(pp.body);
    if (wf.ok && chained) {
      out.orderings.push_back(o);
    } else if (out.rejections.empty()) {
      out.rejections = wf.diagnostics;
      if (!chained) out.rejections.push_back(p.name + ": order " + format_ordering(o) + " is not chain-connected");
    }
  }
  return out;
}

// Calls `visit` on each k-subset of {0..n-1} in lexicographic order until it
// returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return false;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    if (visit(pick)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

NormalizeResult normalize(const Hrg& g, const NormalizeOptions& options) {
  NormalizeResult result;
  const auto violations = validate_grammar(g);
  if (!violations.empty()) {
    for (const auto& v : violations) result.diagnostics.push_back(v.message);
    return result;
  }

  std::vector<Candidates> candidates;
  try {
    for (const auto& p : g.productions) candidates.push_back(candidates_for(g, p));
  } catch (const BudgetError& e) {
    result.diagnostics.push_back(e.what());
    return result;
  }
  bool all_fixable = true;
  for (std::size_t i = 0; i < g.productions.size(); ++i) {
    if (candidates[i].orderings.empty()) {
      all_fixable = false;
      result.diagnostics.push_back(g.productions[i].name + ": no ordering is well-formed and chain-connected");
      for (const auto& d : candidates[i].rejections) result.diagnostics.push_back("  " + d);
    }
  }
  if (!all_fixable) return result;

  auto finish = [&](PermutationPlan plan) {
    result.ok = true;
    result.grammar = apply_plan(g, plan);
    result.positional = translate_grammar(result.grammar);
    result.plan = std::move(plan);
    result.diagnostics.clear();
    return result;
  };

  const std::size_t n = g.productions.size();
  if (options.wf_only) {
    PermutationPlan plan;
    for (std::size_t i = 0; i < n; ++i) {
      plan.entries.push_back({g.productions[i].name, {candidates[i].orderings.front()}});
    }
    return finish(std::move(plan));
  }

  std::size_t best_conflicts = std::numeric_limits<std::size_t>::max();
  std::vector<std::string> best_report;
  bool exhausted = false;
  auto conflict_free = [&](const PermutationPlan& plan) {
    if (++result.assignments_tried > options.search_budget) {
      exhausted = true;
      return true;  // stops the enumeration
    }
    const ParseTable table = build_table(translate_grammar(apply_plan(g, plan)));
    if (table.conflict_free()) return true;
    if (table.conflicts.size() < best_conflicts) {
      best_conflicts = table.conflicts.size();
      best_report.clear();
      for (const auto& c : table.conflicts) {
        best_report.push_back("state " + std::to_string(c.state) + ": " + std::string(to_string(c.kind)) +
                              ": " + c.detail);
      }
    }
    return false;
  };

  // One ordering set per production; `extras[i]` copies beyond the first.
  PermutationPlan plan;
  plan.entries.resize(n);
  for (std::size_t i = 0; i < n; ++i) plan.entries[i].production = g.productions[i].name;

  std::function<bool(std::size_t, std::size_t)> assign = [&](std::size_t i, std::size_t remaining) -> bool {
    if (i == n) return remaining == 0 && conflict_free(plan);
    const auto& cand = candidates[i].orderings;
    const std::size_t max_extra = std::min(remaining, cand.size() - 1);
    for (std::size_t extra = 0; extra <= max_extra; ++extra) {
      const bool found = for_each_subset(cand.size(), extra + 1, [&](const std::vector<std::size_t>& pick) {
        auto& orderings = plan.entries[i].orderings;
        orderings.clear();
        for (std::size_t k : pick) orderings.push_back(cand[k]);
        return assign(i + 1, remaining - extra);
      });
      if (found) return true;
      if (exhausted) return true;
    }
    return false;
  };

  for (std::size_t cost = 0; cost <= options.max_duplicates; ++cost) {
    if (assign(0, cost)) {
      if (exhausted) break;
      return finish(plan);
    }
  }
  if (exhausted) {
    result.diagnostics.push_back("search budget of " + std::to_string(options.search_budget) +
                                 " assignments exhausted");
  } else {
    result.diagnostics.push_back("no conflict-free plan with at most " +
                                 std::to_string(options.max_duplicates) + " duplicated copies");
  }
  for (const auto& line : best_report) result.diagnostics.push_back("  " + line);
  return result;
}

}  // namespace hrgpg
