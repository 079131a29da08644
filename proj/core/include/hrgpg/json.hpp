#pragma once

#include <nlohmann/json.hpp>

#include "hrgpg/derivation.hpp"
#include "hrgpg/enumerate.hpp"
#include "hrgpg/hypergraph.hpp"
#include "hrgpg/plr.hpp"
#include "hrgpg/positional.hpp"
#include "hrgpg/transform.hpp"

// Structured forms of the public types; field names mirror the C++ members.
namespace hrgpg {

void to_json(nlohmann::json& j, const Edge& e);
void to_json(nlohmann::json& j, const Hypergraph& h);
void to_json(nlohmann::json& j, const Violation& v);
void to_json(nlohmann::json& j, const Connector& c);
void to_json(nlohmann::json& j, const InterfaceRef& r);
void to_json(nlohmann::json& j, const Element& e);
void to_json(nlohmann::json& j, const PositionalString& s);
void to_json(nlohmann::json& j, const PositionalProduction& p);
void to_json(nlohmann::json& j, const ProductionPlan& p);
void to_json(nlohmann::json& j, const PermutationPlan& p);
void to_json(nlohmann::json& j, const Conflict& c);
void to_json(nlohmann::json& j, const ParseTable& t);
void to_json(nlohmann::json& j, const DerivationTree& t);
void to_json(nlohmann::json& j, const ParseStats& s);
void to_json(nlohmann::json& j, const ParseResult& r);
void to_json(nlohmann::json& j, const RecognitionRun& r);
void to_json(nlohmann::json& j, const RecognitionReport& r);
void to_json(nlohmann::json& j, const GraphClass& c);

void from_json(const nlohmann::json& j, Connector& c);
void from_json(const nlohmann::json& j, InterfaceRef& r);
void from_json(const nlohmann::json& j, Element& e);
void from_json(const nlohmann::json& j, PositionalString& s);
void from_json(const nlohmann::json& j, PositionalProduction& p);

}  // namespace hrgpg
