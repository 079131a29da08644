#include "hrgpg/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hrgpg/errors.hpp"
#include "hrgpg/isomorphism.hpp"

namespace hrgpg {
namespace {

struct Form {
  Hypergraph graph;
  std::vector<std::string> derivation;
};

// Nodes v1.., edges e1.. in first-occurrence order.
Hypergraph tidy(const Hypergraph& h) {
  std::map<std::string, std::string> names;
  auto rename = [&](const std::string& n) {
    auto [it, fresh] = names.emplace(n, "");
    if (fresh) it->second = "v" + std::to_string(names.size());
    return it->second;
  };
  Hypergraph out;
  std::size_t k = 0;
  for (const auto& e : h.edges()) {
    Edge copy{"e" + std::to_string(++k), e.label, {}};
    for (const auto& a : e.attachments) copy.attachments.push_back(rename(a));
    out.add_edge(std::move(copy));
  }
  std::vector<std::string> ext;
  for (const auto& x : h.externals()) ext.push_back(rename(x));
  out.set_externals(std::move(ext));
  return out;
}

}  // namespace

std::vector<GraphClass> enumerate_graphs(const Hrg& g, const EnumerateOptions& options) {
  std::vector<GraphClass> classes;
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::map<std::string, std::vector<const Production*>, std::less<>> by_lhs;
  for (const auto& p : g.productions) by_lhs[p.lhs].push_back(&p);

  std::deque<Form> frontier;
  frontier.push_back({start_graph(g), {}});
  std::size_t expansions = 0;
  while (!frontier.empty()) {
    Form form = std::move(frontier.front());
    frontier.pop_front();
    if (++expansions > options.max_expansions) {
      throw BudgetError("enumeration exceeded " + std::to_string(options.max_expansions) +
                        " expansions");
    }
    const auto& edges = form.graph.edges();
    auto leftmost = std::find_if(edges.begin(), edges.end(),
                                 [&](const Edge& e) { return g.is_nonterminal(e.label); });
    if (leftmost == edges.end()) {
      const std::string key = invariant_key(form.graph);
      auto& bucket = buckets[key];
      bool found = false;
      for (std::size_t c : bucket) {
        if (isomorphic(classes[c].representative, form.graph)) {
          ++classes[c].derivations;
          found = true;
          break;
        }
      }
      if (!found) {
        bucket.push_back(classes.size());
        classes.push_back({tidy(form.graph), 1, form.derivation});
      }
      continue;
    }
    const std::size_t index = static_cast<std::size_t>(leftmost - edges.begin());
    auto it = by_lhs.find(leftmost->label);
    if (it == by_lhs.end()) continue;
    for (const Production* p : it->second) {
      Hypergraph next = derive_step(form.graph, index, *p);
      if (next.edge_count() > options.max_edges) continue;
      auto derivation = form.derivation;
      derivation.push_back(p->name);
      frontier.push_back({std::move(next), std::move(derivation)});
      if (frontier.size() > options.max_frontier) {
        throw BudgetError("enumeration frontier exceeded " + std::to_string(options.max_frontier) +
                          " sentential forms");
      }
    }
  }
  std::stable_sort(classes.begin(), classes.end(), [](const GraphClass& a, const GraphClass& b) {
    return a.representative.edge_count() < b.representative.edge_count();
  });
  return classes;
}

long find_class(const std::vector<GraphClass>& classes, const Hypergraph& h) {
  const std::string key = invariant_key(h);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& rep = classes[i].representative;
    if (rep.edge_count() != h.edge_count() || invariant_key(rep) != key) continue;
    if (isomorphic(rep, h)) return static_cast<long>(i);
  }
  return -1;
}

std::size_t generation_ambiguity(const Hrg& g, const Hypergraph& h, const EnumerateOptions& options) {
  EnumerateOptions bounded = options;
  bounded.max_edges = h.edge_count();
  const auto classes = enumerate_graphs(g, bounded);
  const long index = find_class(classes, h);
  return index < 0 ? 0 : classes[static_cast<std::size_t>(index)].derivations;
}

}  // namespace hrgpg
