#pragma once

#include <json.hpp>

#include "ladget/gadget.hpp"
#include "ladget/search.hpp"
#include "ladget/verify.hpp"

namespace ladget {

// Report schemas. Truth tables serialize as their pattern-ordered bit
// string, roles as {"anchor", "output", "inputs"}, rule ids verbatim.

void to_json(nlohmann::json& j, const RoleLabeling& roles);
void from_json(const nlohmann::json& j, RoleLabeling& roles);

void to_json(nlohmann::json& j, const ColorMapping& mapping);
void to_json(nlohmann::json& j, const BooleanFunction& f);
void to_json(nlohmann::json& j, const VerificationReport& report);

void to_json(nlohmann::json& j, const Hit& hit);
void from_json(const nlohmann::json& j, Hit& hit);
void to_json(nlohmann::json& j, const OrderCounters& counters);
void from_json(const nlohmann::json& j, OrderCounters& counters);
void to_json(nlohmann::json& j, const SearchOptions& opts);
void to_json(nlohmann::json& j, const RarityRow& row);
void to_json(nlohmann::json& j, const SearchReport& report);

}  // namespace ladget
