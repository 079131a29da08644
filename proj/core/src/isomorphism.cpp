#include "hrgpg/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hrgpg/errors.hpp"

namespace hrgpg {
namespace {

struct Indexed {
  std::vector<int> label;
  std::vector<std::vector<int>> att;
  std::vector<int> ext;
  std::vector<std::vector<int>> incident;  // node -> edges touching it (with repeats removed)
  std::vector<int> degree;
};

Indexed index_graph(const Hypergraph& h, std::map<std::string, int>& labels) {
  Indexed g;
  const std::size_t n = h.node_count();
  g.incident.resize(n);
  g.degree.assign(n, 0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edges()[i];
    auto [it, _] = labels.emplace(e.label, static_cast<int>(labels.size()));
    g.label.push_back(it->second);
    std::vector<int> att;
    for (const auto& a : e.attachments) {
      const int v = static_cast<int>(*h.node_index(a));
      att.push_back(v);
      ++g.degree[v];
      auto& inc = g.incident[v];
      if (inc.empty() || inc.back() != static_cast<int>(i)) inc.push_back(static_cast<int>(i));
    }
    g.att.push_back(std::move(att));
  }
  for (const auto& x : h.externals()) g.ext.push_back(static_cast<int>(*h.node_index(x)));
  return g;
}

class Matcher {
 public:
  Matcher(const Indexed& a, const Indexed& b) : a_(a), b_(b) {
    map_.assign(a.degree.size(), -1);
    inverse_.assign(b.degree.size(), -1);
    edge_map_.assign(a.label.size(), -1);
    used_.assign(b.label.size(), false);
  }

  bool run() {
    for (std::size_t i = 0; i < a_.ext.size(); ++i) {
      if (!bind(a_.ext[i], b_.ext[i])) return false;
    }
    order_edges();
    return extend(0);
  }

  const std::vector<int>& node_map() const { return map_; }
  const std::vector<int>& edge_map() const { return edge_map_; }

 private:
  bool bind(int va, int vb) {
    if (map_[va] == vb) return true;
    if (map_[va] != -1 || inverse_[vb] != -1) return false;
    if (a_.degree[va] != b_.degree[vb]) return false;
    map_[va] = vb;
    inverse_[vb] = va;
    return true;
  }

  // Edges sharing the most already-reached nodes go first so that most
  // attachments are fixed by the time an edge is matched.
  void order_edges() {
    const std::size_t m = a_.label.size();
    std::vector<bool> reached(a_.degree.size(), false);
    for (int x : a_.ext) reached[x] = true;
    std::vector<bool> placed(m, false);
    for (std::size_t step = 0; step < m; ++step) {
      int best = -1;
      int best_score = -1;
      for (std::size_t i = 0; i < m; ++i) {
        if (placed[i]) continue;
        int score = 0;
        for (int v : a_.att[i]) score += reached[v];
        if (score > best_score) {
          best = static_cast<int>(i);
          best_score = score;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (int v : a_.att[best]) reached[v] = true;
    }
  }

  bool try_edge(int ea, int eb, std::vector<int>& fresh) {
    const auto& att_a = a_.att[ea];
    const auto& att_b = b_.att[eb];
    for (std::size_t k = 0; k < att_a.size(); ++k) {
      const int va = att_a[k];
      const int vb = att_b[k];
      if (map_[va] == -1 && inverse_[vb] == -1) {
        if (!bind(va, vb)) return false;
        fresh.push_back(va);
      } else if (map_[va] != vb) {
        return false;
      }
    }
    return true;
  }

  void undo(const std::vector<int>& fresh) {
    for (int va : fresh) {
      inverse_[map_[va]] = -1;
      map_[va] = -1;
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int ea = order_[depth];
    const auto& att_a = a_.att[ea];

    // Candidates come from the image of an already mapped attachment when
    // there is one, otherwise from every edge of b.
    const std::vector<int>* pool = nullptr;
    for (int va : att_a) {
      if (map_[va] != -1) {
        pool = &b_.incident[map_[va]];
        break;
      }
    }
    auto consider = [&](int eb) {
      if (used_[eb] || b_.label[eb] != a_.label[ea] || b_.att[eb].size() != att_a.size()) {
        return false;
      }
      std::vector<int> fresh;
      if (try_edge(ea, eb, fresh)) {
        used_[eb] = true;
        edge_map_[ea] = eb;
        if (extend(depth + 1)) return true;
        used_[eb] = false;
        edge_map_[ea] = -1;
      }
      undo(fresh);
      return false;
    };
    if (pool != nullptr) {
      for (int eb : *pool) {
        if (consider(eb)) return true;
      }
    } else {
      for (std::size_t eb = 0; eb < b_.label.size(); ++eb) {
        if (consider(static_cast<int>(eb))) return true;
      }
    }
    return false;
  }

  const Indexed& a_;
  const Indexed& b_;
  std::vector<int> map_;
  std::vector<int> inverse_;
  std::vector<int> edge_map_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<Isomorphism> isomorphic(const Hypergraph& a, const Hypergraph& b,
                                      const IsoOptions& options) {
  const std::size_t bound = options.max_edges;
  if (a.edge_count() > bound || b.edge_count() > bound) {
    throw BudgetError("isomorphism check limited to " + std::to_string(bound) + " edges (got " +
                      std::to_string(std::max(a.edge_count(), b.edge_count())) + ")");
  }
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() ||
      a.externals().size() != b.externals().size()) {
    return std::nullopt;
  }
  if (invariant_key(a) != invariant_key(b)) return std::nullopt;

  std::map<std::string, int> labels;
  const Indexed ia = index_graph(a, labels);
  const Indexed ib = index_graph(b, labels);

  Matcher matcher(ia, ib);
  if (!matcher.run()) return std::nullopt;

  Isomorphism iso;
  std::vector<int> node_map = matcher.node_map();
  // Isolated nodes (only in invalid graphs) pair up in order.
  std::vector<bool> taken(b.node_count(), false);
  for (int vb : node_map) {
    if (vb >= 0) taken[vb] = true;
  }
  std::size_t next = 0;
  for (auto& vb : node_map) {
    if (vb >= 0) continue;
    while (taken[next]) ++next;
    vb = static_cast<int>(next);
    taken[next] = true;
  }
  for (std::size_t i = 0; i < node_map.size(); ++i) {
    iso.nodes.emplace(a.nodes()[i], b.nodes()[node_map[i]]);
  }
  for (int eb : matcher.edge_map()) iso.edges.push_back(static_cast<std::size_t>(eb));
  return iso;
}

std::string invariant_key(const Hypergraph& h) {
  std::vector<std::size_t> degree(h.node_count(), 0);
  for (const auto& e : h.edges()) {
    for (const auto& a : e.attachments) ++degree[*h.node_index(a)];
  }
  std::vector<std::string> edge_sigs;
  for (const auto& e : h.edges()) {
    std::ostringstream s;
    s << e.label << '(';
    for (const auto& a : e.attachments) s << degree[*h.node_index(a)] << ',';
    s << ')';
    edge_sigs.push_back(s.str());
  }
  std::ostringstream key;
  key << h.node_count() << '/' << h.edge_count() << '/';
  for (const auto& x : h.externals()) {
    key << (h.has_node(x) ? degree[*h.node_index(x)] : 0) << ',';
  }
  key << '/';
  for (auto d : sorted(degree)) key << d << ',';
  key << '/';
  for (const auto& s : sorted(edge_sigs)) key << s;
  return key.str();
}

}  // namespace hrgpg
