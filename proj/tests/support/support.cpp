#include "support.hpp"

#include <algorithm>
#include <map>

#include "hrgpg/grammar_io.hpp"
#include "hrgpg/graph_io.hpp"

namespace hrgpg::testing {

std::filesystem::path fixture(std::string_view name) {
  return std::filesystem::path(HRGPG_SOURCE_DIR) / "fixtures" / name;
}

std::filesystem::path repo_file(std::string_view relative) {
  return std::filesystem::path(HRGPG_SOURCE_DIR) / relative;
}

Hrg load_grammar_fixture(std::string_view name) { return read_grammar_file(fixture(name)); }

Hypergraph load_graph_fixture(std::string_view name) { return read_graph_file(fixture(name)).graph; }

Hypergraph cycle_graph(std::string_view word) {
  Hypergraph h;
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    h.add_edge(Edge{"e" + std::to_string(i + 1), std::string(1, word[i]),
                    {"n" + std::to_string(i), "n" + std::to_string((i + 1) % n)}});
  }
  return h;
}

std::vector<std::string> words(std::string_view letters, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (char c : letters) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

bool is_directed_cycle(const Hypergraph& h, const std::set<std::string>& labels) {
  if (h.edge_count() == 0 || !h.externals().empty()) return false;
  std::map<std::string, int> in, out;
  for (const auto& e : h.edges()) {
    if (e.attachments.size() != 2 || !labels.contains(e.label)) return false;
    ++out[e.attachments[0]];
    ++in[e.attachments[1]];
  }
  for (const auto& v : h.nodes()) {
    if (in[v] != 1 || out[v] != 1) return false;
  }
  return !cycle_word(h).empty();
}

std::string cycle_word(const Hypergraph& h) {
  if (h.edge_count() == 0) return "";
  std::map<std::string, std::size_t> leaving;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edges()[i];
    if (e.attachments.size() != 2 || e.label.size() != 1) return "";
    if (!leaving.emplace(e.attachments[0], i).second) return "";
  }
  std::string word;
  std::size_t at = 0;
  std::vector<bool> seen(h.edge_count(), false);
  while (!seen[at]) {
    seen[at] = true;
    word += h.edges()[at].label;
    auto next = leaving.find(h.edges()[at].attachments[1]);
    if (next == leaving.end()) return "";
    at = next->second;
  }
  if (at != 0 || word.size() != h.edge_count()) return "";
  return word;
}

std::size_t distinct_rotations(const std::string& word) {
  std::set<std::string> rotations;
  std::string w = word;
  for (std::size_t i = 0; i < word.size(); ++i) {
    rotations.insert(w);
    std::rotate(w.begin(), w.begin() + 1, w.end());
  }
  return rotations.size();
}

LabelSet random_labels() { return {{"a", 2}, {"b", 2}, {"t", 3}, {"u", 1}}; }

Hypergraph random_connected(std::mt19937_64& rng, const RandomGraphShape& shape) {
  static const std::vector<std::pair<std::string, int>> labels{{"a", 2}, {"b", 2}, {"t", 3}, {"u", 1}};
  auto uniform = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto chance = [&](double p) { return static_cast<double>(rng() % 1000) < p * 1000.0; };

  const std::size_t edges = shape.min_edges + uniform(shape.max_edges - shape.min_edges + 1);
  std::vector<std::string> nodes;
  auto fresh = [&] {
    nodes.push_back("v" + std::to_string(nodes.size() + 1));
    return nodes.back();
  };
  Hypergraph h;
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& [label, arity] = labels[uniform(labels.size())];
    Edge e{"e" + std::to_string(i + 1), label, {}};
    // The anchor tentacle ties the edge to a node that existed before it.
    const std::size_t existing = nodes.size();
    const std::size_t anchor = uniform(static_cast<std::size_t>(arity));
    for (int k = 0; k < arity; ++k) {
      if (existing > 0 && static_cast<std::size_t>(k) == anchor) {
        e.attachments.push_back(nodes[uniform(existing)]);
      } else if (!nodes.empty() && chance(shape.reuse)) {
        e.attachments.push_back(nodes[uniform(nodes.size())]);
      } else {
        e.attachments.push_back(fresh());
      }
    }
    h.add_edge(std::move(e));
  }
  std::vector<std::string> pool = h.nodes();
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(pool.size(), uniform(shape.max_externals + 1)));
  h.set_externals(pool);
  return h;
}

std::vector<std::size_t> random_chain_order(const Hypergraph& h, std::mt19937_64& rng) {
  const std::size_t n = h.edge_count();
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  std::set<std::string> reached;
  while (order.size() < n) {
    std::vector<std::size_t> options;
    for (std::size_t e = 0; e < n; ++e) {
      if (used[e]) continue;
      const auto& att = h.edges()[e].attachments;
      if (order.empty() || std::any_of(att.begin(), att.end(), [&](const auto& v) { return reached.contains(v); })) {
        options.push_back(e);
      }
    }
    if (options.empty()) return {};  // disconnected
    const std::size_t pick = options[rng() % options.size()];
    used[pick] = true;
    order.push_back(pick);
    for (const auto& v : h.edges()[pick].attachments) reached.insert(v);
  }
  return order;
}

}  // namespace hrgpg::testing
