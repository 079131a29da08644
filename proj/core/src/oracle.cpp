#include "hrgpg/oracle.hpp"

#include <algorithm>
#include <map>

#include "hrgpg/errors.hpp"

namespace hrgpg {

std::string_view to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::Relabel: return "relabel";
    case MutationKind::Delete: return "delete";
    case MutationKind::Split: return "split";
  }
  return "unknown";
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Hypergraph rebuild(const std::vector<Edge>& edges) { return Hypergraph(edges); }

}  // namespace

std::optional<Hypergraph> mutate(const Hypergraph& h, MutationKind kind, const LabelSet& terminals,
                                 std::mt19937_64& rng) {
  if (h.edge_count() == 0) return std::nullopt;
  std::vector<Edge> edges = h.edges();
  switch (kind) {
    case MutationKind::Relabel: {
      Edge& e = edges[pick(rng, edges.size())];
      std::vector<std::string> others;
      for (const auto& [name, arity] : terminals) {
        if (name != e.label && static_cast<std::size_t>(arity) == e.attachments.size()) others.push_back(name);
      }
      if (others.empty()) return std::nullopt;
      e.label = others[pick(rng, others.size())];
      return rebuild(edges);
    }
    case MutationKind::Delete: {
      if (edges.size() < 2) return std::nullopt;
      edges.erase(edges.begin() + static_cast<long>(pick(rng, edges.size())));
      return rebuild(edges);
    }
    case MutationKind::Split: {
      std::vector<std::pair<std::size_t, std::size_t>> shared;  // (edge, position)
      for (std::size_t e = 0; e < edges.size(); ++e) {
        for (std::size_t k = 0; k < edges[e].attachments.size(); ++k) {
          if (h.degree(edges[e].attachments[k]) > 1) shared.emplace_back(e, k);
        }
      }
      if (shared.empty()) return std::nullopt;
      const auto [e, k] = shared[pick(rng, shared.size())];
      std::string fresh = "split";
      while (h.has_node(fresh)) fresh += "'";
      edges[e].attachments[k] = fresh;
      return rebuild(edges);
    }
  }
  return std::nullopt;
}

OracleReport run_oracle(const Hrg& g, const std::vector<NamedGraph>& corpus, const OracleOptions& options) {
  const ParseTable table = build_table(translate_grammar(g));
  OracleReport report;

  std::size_t limit = options.max_edges;
  for (const auto& named : corpus) limit = std::max(limit, named.graph.edge_count());
  std::vector<GraphClass> classes;
  if (limit > 0) {
    EnumerateOptions enumeration = options.enumeration;
    enumeration.max_edges = limit;
    classes = enumerate_graphs(g, enumeration);
  }

  auto check = [&](std::string name, const Hypergraph& h, std::optional<bool> known_member) {
    OracleCase c;
    c.name = std::move(name);
    c.edges = h.edge_count();
    c.member = known_member ? *known_member : find_class(classes, h) >= 0;
    try {
      const auto result = parse(table, h);
      c.parsed = result.accepted();
      c.parser_note = result.diagnostic;
    } catch (const AmbiguityError& e) {
      c.parser_note = e.what();
    }
    if (c.agrees()) ++report.agreeing;
    report.cases.push_back(std::move(c));
  };

  std::vector<const GraphClass*> language;
  for (const auto& c : classes) {
    if (c.representative.edge_count() <= options.max_edges) language.push_back(&c);
  }
  for (std::size_t i = 0; i < language.size(); ++i) {
    check("language#" + std::to_string(i + 1), language[i]->representative, true);
    ++report.members;
  }

  if (!language.empty() && options.mutations > 0) {
    std::mt19937_64 rng(options.seed);
    const MutationKind kinds[] = {MutationKind::Relabel, MutationKind::Delete, MutationKind::Split};
    std::size_t attempts = 0;
    const std::size_t max_attempts = options.mutations * 50;
    while (report.mutants < options.mutations && attempts++ < max_attempts) {
      const GraphClass& base = *language[pick(rng, language.size())];
      const MutationKind kind = kinds[pick(rng, 3)];
      auto mutant = mutate(base.representative, kind, g.terminals, rng);
      if (!mutant || find_class(classes, *mutant) >= 0) continue;
      ++report.mutants;
      check("mutant#" + std::to_string(report.mutants) + " (" + std::string(to_string(kind)) + ")", *mutant,
            false);
    }
  }

  for (const auto& named : corpus) check(named.name, named.graph, std::nullopt);
  return report;
}

}  // namespace hrgpg
