#include <algorithm>
#include <map>
#include <set>

#include "hrgpg/errors.hpp"
#include "hrgpg/plr.hpp"

namespace hrgpg {

namespace {

struct Input {
  explicit Input(const Hypergraph& h) : graph(h) {
    for (const auto& v : h.nodes()) {
      node_id.emplace(v, node_id.size());
    }
    incident.resize(node_id.size());
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      std::vector<std::size_t> att;
      for (const auto& v : h.edges()[e].attachments) {
        const std::size_t id = node_id.at(v);
        att.push_back(id);
        if (incident[id].empty() || incident[id].back() != e) incident[id].push_back(e);
      }
      attachments.push_back(std::move(att));
    }
  }

  const std::string& node_name(std::size_t id) const { return graph.nodes()[id]; }

  const Hypergraph& graph;
  std::map<std::string, std::size_t, std::less<>> node_id;
  std::vector<std::vector<std::size_t>> attachments;
  std::vector<std::vector<std::size_t>> incident;
};

struct Entry {
  std::size_t state = 0;
  std::vector<std::size_t> binding;  // input node per interface
  DerivationTree::Slot slot;
  // Input edges covered, as a range of shift positions: a subtree on the
  // stack always spans consecutive shifts.
  std::size_t first_shift = 0;
  std::size_t end_shift = 0;
};

class Parser {
 public:
  Parser(const ParseTable& table, const Hypergraph& h) : t_(table), in_(h) {
    consumed_.assign(h.edge_count(), false);
    shift_position_.assign(h.edge_count(), 0);
    for (std::size_t e = 0; e < h.edge_count(); ++e) all_edges_.push_back(e);
  }

  ParseResult run(const std::optional<std::string>& start_edge) {
    if (in_.graph.edge_count() == 0) return reject("input has no edges");
    std::size_t first = 0;
    if (start_edge) {
      auto idx = in_.graph.edge_index(*start_edge);
      if (!idx) return reject("no edge '" + *start_edge + "' in the input");
      if (!shiftable_at_start(*idx)) {
        return reject("edge '" + *start_edge + "' (" + in_.graph.edges()[*idx].label +
                      ") cannot start a parse");
      }
      first = *idx;
    } else {
      auto it = std::find_if(all_edges_.begin(), all_edges_.end(),
                             [&](std::size_t e) { return shiftable_at_start(e); });
      if (it == all_edges_.end()) return reject("no edge can start a parse");
      first = *it;
    }
    result_.start_edge = in_.graph.edges()[first].id;
    stack_.push_back(Entry{0, {}, DerivationTree::Leaf{}, 0, 0});
    shift(first, t_.states[0].gotos.at(in_.graph.edges()[first].label));

    while (true) {
      const std::size_t s = stack_.back().state;
      const State& st = t_.states[s];
      const auto candidates = fetch(st);
      if (candidates.size() > 1) {
        std::string names;
        for (const auto& [e, target] : candidates) {
          names += (names.empty() ? "" : ", ") + in_.graph.edges()[e].id;
        }
        throw AmbiguityError("state " + std::to_string(s) + ": edges " + names + " all satisfy the fetch");
      }
      if (candidates.size() == 1) {
        shift(candidates.front().first, candidates.front().second);
        continue;
      }
      const bool all_consumed = result_.stats.shifts == consumed_.size();
      if (st.accept && stack_.size() == 2 && (all_consumed || st.reduces.empty())) {
        return finish_accept(all_consumed);
      }
      if (st.reduces.size() > 1) return reject("state " + std::to_string(s) + ": several reductions apply");
      if (st.reduces.size() == 1) {
        if (auto failure = reduce(st.reduces.front())) return reject(*failure);
        continue;
      }
      return reject("state " + std::to_string(s) + ": no edge satisfies any fetch");
    }
  }

 private:
  bool shiftable_at_start(std::size_t e) const {
    const auto& label = in_.graph.edges()[e].label;
    const auto& shifts = t_.states[0].shifts;
    return std::any_of(shifts.begin(), shifts.end(), [&](const ShiftAction& s) { return s.label == label; });
  }

  ParseResult reject(std::string why) {
    result_.outcome = ParseOutcome::Reject;
    result_.diagnostic = std::move(why);
    return result_;
  }

  void shift(std::size_t e, std::size_t target) {
    consumed_[e] = true;
    const std::size_t position = result_.stats.shifts++;
    shift_position_[e] = position;
    stack_.push_back(
        Entry{target, in_.attachments[e], DerivationTree::Leaf{in_.graph.edges()[e].id}, position, position + 1});
  }

  bool satisfies(std::size_t e, const std::vector<Connector>& fetch) const {
    const auto& att = in_.attachments[e];
    const std::size_t depth_limit = stack_.size() - 1;  // entries above the bottom marker
    for (const auto& c : fetch) {
      const auto k = static_cast<std::size_t>(c.source_interface - 1);
      const auto l = static_cast<std::size_t>(c.target_interface - 1);
      if (l >= att.size()) return false;
      if (c.is_self()) {
        if (k >= att.size() || att[k] != att[l]) return false;
        continue;
      }
      const auto z = static_cast<std::size_t>(c.distance);
      if (z >= depth_limit) return false;
      const auto& source = stack_[stack_.size() - 1 - z].binding;
      if (k >= source.size() || source[k] != att[l]) return false;
    }
    return true;
  }

  // Distinct unconsumed edges satisfying some shift of `st`, with targets.
  std::vector<std::pair<std::size_t, std::size_t>> fetch(const State& st) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& sh : st.shifts) {
      auto anchor = std::find_if(sh.fetch.begin(), sh.fetch.end(), [](const Connector& c) { return c.distance >= 0; });
      std::vector<std::size_t> pool;
      if (anchor == sh.fetch.end()) {
        pool = all_edges_;
      } else {
        const auto z = static_cast<std::size_t>(anchor->distance);
        if (z >= stack_.size() - 1) continue;
        const auto& binding = stack_[stack_.size() - 1 - z].binding;
        const auto k = static_cast<std::size_t>(anchor->source_interface - 1);
        if (k >= binding.size()) continue;
        pool = in_.incident[binding[k]];
      }
      for (std::size_t e : pool) {
        if (consumed_[e] || in_.graph.edges()[e].label != sh.label) continue;
        ++result_.stats.fetch_probes;
        if (!satisfies(e, sh.fetch)) continue;
        if (std::none_of(out.begin(), out.end(), [&](const auto& p) { return p.first == e; })) {
          out.emplace_back(e, sh.target);
        }
      }
    }
    return out;
  }

  // Returns a diagnostic when the reduction is not valid on this input.
  std::optional<std::string> reduce(std::size_t r) {
    const auto& prod = t_.grammar.productions[r];
    const auto& shape = t_.shapes[r];
    const std::size_t n = prod.size();
    if (stack_.size() - 1 < n) return prod.name + ": stack too short to reduce";
    const std::size_t base = stack_.size() - n;

    std::vector<std::optional<std::size_t>> node_of(shape.class_is_external.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& binding = stack_[base + i].binding;
      for (std::size_t k = 0; k < binding.size(); ++k) {
        auto& slot = node_of[shape.interface_class[i][k]];
        if (!slot) {
          slot = binding[k];
        } else if (*slot != binding[k]) {
          return prod.name + ": element " + std::to_string(i + 1) + " (" + prod.body.elements[i].label +
                 ") interface " + std::to_string(k + 1) + " is at node " + in_.node_name(binding[k]) +
                 ", connector demands " + in_.node_name(*slot);
        }
      }
    }
    for (std::size_t c = 0; c < node_of.size(); ++c) {
      if (shape.class_is_external[c]) continue;
      for (std::size_t d = 0; d < node_of.size(); ++d) {
        if (d != c && node_of[d] == node_of[c]) {
          return prod.name + ": internal node " + in_.node_name(*node_of[c]) + " also carries another node";
        }
      }
    }
    const std::size_t first = stack_[base].first_shift;
    const std::size_t end = stack_.back().end_shift;
    for (std::size_t c = 0; c < node_of.size(); ++c) {
      if (shape.class_is_external[c]) continue;
      const std::size_t v = *node_of[c];
      for (auto e : in_.incident[v]) {
        if (!consumed_[e] || shift_position_[e] < first || shift_position_[e] >= end) {
          return prod.name + ": internal node " + in_.node_name(v) + " has edges outside the reduced part";
        }
      }
    }

    DerivationTree::Node node{prod.name, {}, {}};
    std::vector<std::size_t> binding;
    for (auto cls : shape.external_class) {
      binding.push_back(*node_of[cls]);
      node.attachments.push_back(in_.node_name(*node_of[cls]));
    }
    for (std::size_t i = base; i < stack_.size(); ++i) node.slots.push_back(stack_[i].slot);
    tree_.nodes.push_back(std::move(node));
    stack_.resize(base);
    ++result_.stats.reduces;

    const State& below = t_.states[stack_.back().state];
    auto go = below.gotos.find(prod.lhs);
    if (go == below.gotos.end()) {
      return "no goto on " + prod.lhs + " from state " + std::to_string(stack_.back().state);
    }
    stack_.push_back(
        Entry{go->second, std::move(binding), DerivationTree::Child{tree_.nodes.size() - 1}, first, end});
    return std::nullopt;
  }

  ParseResult finish_accept(bool all_consumed) {
    if (!all_consumed) {
      std::string rest;
      for (std::size_t e = 0; e < consumed_.size(); ++e) {
        if (!consumed_[e]) rest += (rest.empty() ? "" : ", ") + in_.graph.edges()[e].id;
      }
      return reject("derivation complete but edges remain: " + rest);
    }
    const auto& binding = stack_.back().binding;
    std::set<std::size_t> distinct(binding.begin(), binding.end());
    if (distinct.size() != binding.size()) return reject("start symbol interfaces bind one node twice");
    if (const auto* child = std::get_if<DerivationTree::Child>(&stack_.back().slot)) {
      tree_.root = child->node;
    }
    result_.outcome = ParseOutcome::Accept;
    result_.tree = std::move(tree_);
    return result_;
  }

  const ParseTable& t_;
  Input in_;
  std::vector<bool> consumed_;
  std::vector<std::size_t> shift_position_;
  std::vector<Entry> stack_;
  std::vector<std::size_t> all_edges_;
  DerivationTree tree_;
  ParseResult result_;
};

// Rotation-invariant key for a cyclic leaf sequence.
std::vector<std::string> min_rotation(std::vector<std::string> seq) {
  std::vector<std::string> best = seq;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    if (seq < best) best = seq;
  }
  return best;
}

}  // namespace

ParseResult parse(const ParseTable& table, const Hypergraph& h, const std::optional<std::string>& start_edge) {
  return Parser(table, h).run(start_edge);
}

std::vector<std::string> admissible_starts(const ParseTable& table, const Hypergraph& h) {
  std::set<std::string> labels;
  for (const auto& s : table.states.at(0).shifts) labels.insert(s.label);
  std::vector<std::string> out;
  for (const auto& e : h.edges()) {
    if (labels.contains(e.label)) out.push_back(e.id);
  }
  return out;
}

RecognitionReport recognition_ambiguity(const ParseTable& table, const Hypergraph& h) {
  RecognitionReport report;
  std::set<std::vector<std::string>> classes;
  for (const auto& start : admissible_starts(table, h)) {
    RecognitionRun run;
    run.start_edge = start;
    try {
      const auto result = parse(table, h, start);
      run.outcome = result.accepted() ? "accept" : "reject";
      run.diagnostic = result.diagnostic;
      if (result.tree) {
        run.leaves = leaf_sequence(*result.tree);
        run.productions = production_sequence(*result.tree);
      }
    } catch (const AmbiguityError& e) {
      run.outcome = "ambiguous";
      run.diagnostic = e.what();
      ++report.fetch_ambiguities;
    }
    if (run.outcome == "accept") {
      ++report.accepting;
      classes.insert(min_rotation(run.leaves));
    }
    report.runs.push_back(std::move(run));
  }
  report.tree_classes = classes.size();
  return report;
}

}  // namespace hrgpg
