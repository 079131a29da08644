#include "hrgpg/json.hpp"

#include <map>

#include "hrgpg/transform.hpp"

namespace hrgpg {

using nlohmann::json;

void to_json(json& j, const Edge& e) {
  j = json{{"id", e.id}, {"label", e.label}, {"attachments", e.attachments}};
}

void to_json(json& j, const Hypergraph& h) {
  j = json{{"nodes", h.nodes()}, {"edges", h.edges()}, {"externals", h.externals()}};
}

void to_json(json& j, const Violation& v) {
  j = json{{"kind", std::string(to_string(v.kind))}, {"subject", v.subject}, {"message", v.message}};
}

void to_json(json& j, const Connector& c) {
  j = json::array({c.source_interface, c.distance, c.target_interface});
}

void to_json(json& j, const InterfaceRef& r) {
  j = json{{"element", r.element + 1}, {"interface", r.interface}};
}

void to_json(json& j, const Element& e) {
  j = json{{"conjunction", e.conjunction}, {"label", e.label}, {"arity", e.arity}};
  if (!e.instance.empty()) j["instance"] = e.instance;
}

void to_json(json& j, const PositionalString& s) {
  j = json{{"elements", s.elements}, {"unary", s.unary}, {"text", format_string(s)}};
}

void to_json(json& j, const PositionalProduction& p) {
  j = json{{"name", p.name},
           {"lhs", p.lhs},
           {"body", p.body},
           {"external_map", p.external_map},
           {"text", format_production(p)}};
  if (!p.origin.empty()) j["origin"] = p.origin;
}

void to_json(json& j, const ProductionPlan& p) {
  json orderings = json::array();
  for (const auto& o : p.orderings) {
    json one = json::array();
    for (auto i : o) one.push_back(i + 1);
    orderings.push_back(std::move(one));
  }
  j = json{{"production", p.production}, {"kind", std::string(to_string(p.kind()))}, {"orderings", orderings}};
}

void to_json(json& j, const PermutationPlan& p) {
  j = json{{"entries", p.entries}, {"cost", p.cost()}};
}

void to_json(json& j, const Conflict& c) {
  j = json{{"state", c.state}, {"kind", std::string(to_string(c.kind))}, {"detail", c.detail}};
}

void to_json(json& j, const ParseTable& t) {
  json states = json::array();
  for (std::size_t s = 0; s < t.states.size(); ++s) {
    const State& st = t.states[s];
    json items = json::array();
    for (const auto& item : st.items) items.push_back(format_item(t.grammar, item));
    json shifts = json::array();
    for (const auto& sh : st.shifts) {
      shifts.push_back(json{{"label", sh.label}, {"fetch", sh.fetch}, {"target", sh.target}});
    }
    json gotos = json::object();
    for (const auto& [label, target] : st.gotos) {
      if (t.grammar.is_nonterminal(label)) gotos[label] = target;
    }
    json reduces = json::array();
    for (auto r : st.reduces) reduces.push_back(t.grammar.productions[r].name);
    states.push_back(json{{"id", s},
                          {"items", items},
                          {"shifts", shifts},
                          {"gotos", gotos},
                          {"reduces", reduces},
                          {"accept", st.accept}});
  }
  j = json{{"state_count", t.states.size()}, {"states", states}, {"conflicts", t.conflicts}};
}

namespace {

json tree_node(const DerivationTree& t, std::size_t index) {
  const auto& node = t.nodes.at(index);
  json children = json::array();
  for (const auto& slot : node.slots) {
    if (const auto* leaf = std::get_if<DerivationTree::Leaf>(&slot)) {
      children.push_back(json{{"edge", leaf->edge_id}});
    } else {
      children.push_back(tree_node(t, std::get<DerivationTree::Child>(slot).node));
    }
  }
  return json{{"production", node.production}, {"attachments", node.attachments}, {"children", children}};
}

}  // namespace

void to_json(json& j, const DerivationTree& t) {
  if (t.empty()) {
    j = nullptr;
    return;
  }
  j = tree_node(t, t.root);
}

void to_json(json& j, const ParseStats& s) {
  j = json{{"shifts", s.shifts}, {"reduces", s.reduces}, {"fetch_probes", s.fetch_probes}};
}

void to_json(json& j, const ParseResult& r) {
  j = json{{"outcome", r.accepted() ? "accept" : "reject"},
           {"start_edge", r.start_edge},
           {"diagnostic", r.diagnostic},
           {"stats", r.stats}};
  if (r.tree) {
    j["tree"] = *r.tree;
    j["leaves"] = leaf_sequence(*r.tree);
    j["productions"] = production_sequence(*r.tree);
  } else {
    j["tree"] = nullptr;
  }
}

void to_json(json& j, const RecognitionRun& r) {
  j = json{{"start_edge", r.start_edge},
           {"outcome", r.outcome},
           {"diagnostic", r.diagnostic},
           {"leaves", r.leaves},
           {"productions", r.productions}};
}

void to_json(json& j, const RecognitionReport& r) {
  j = json{{"runs", r.runs},
           {"accepting", r.accepting},
           {"fetch_ambiguities", r.fetch_ambiguities},
           {"tree_classes", r.tree_classes},
           {"unambiguous", r.unambiguous()}};
}

void to_json(json& j, const GraphClass& c) {
  j = json{{"representative", c.representative},
           {"edges", c.representative.edge_count()},
           {"derivations", c.derivations},
           {"first_derivation", c.first_derivation}};
}

void from_json(const json& j, Connector& c) {
  c.source_interface = j.at(0).get<int>();
  c.distance = j.at(1).get<int>();
  c.target_interface = j.at(2).get<int>();
}

void from_json(const json& j, InterfaceRef& r) {
  r.element = j.at("element").get<std::size_t>() - 1;
  r.interface = j.at("interface").get<int>();
}

void from_json(const json& j, Element& e) {
  e.conjunction = j.at("conjunction").get<std::vector<Connector>>();
  e.label = j.at("label").get<std::string>();
  e.arity = j.at("arity").get<int>();
  e.instance = j.value("instance", std::string{});
}

void from_json(const json& j, PositionalString& s) {
  s.elements = j.at("elements").get<std::vector<Element>>();
  s.unary = j.value("unary", std::vector<InterfaceRef>{});
}

void from_json(const json& j, PositionalProduction& p) {
  p.name = j.at("name").get<std::string>();
  p.lhs = j.at("lhs").get<std::string>();
  p.body = j.at("body").get<PositionalString>();
  p.external_map = j.at("external_map").get<std::vector<InterfaceRef>>();
  p.origin = j.value("origin", std::string{});
}

}  // namespace hrgpg
