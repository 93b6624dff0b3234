#pragma once

#include <json.hpp>

#include "fockcalc/blocks.hpp"
#include "fockcalc/canonical.hpp"
#include "fockcalc/weyl.hpp"

namespace fockcalc {

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Laurent& p);       // [[exponent, coefficient], ...]
nlohmann::json to_json(const FockVector& x);    // descending total order
nlohmann::json to_json(const CoreData& data);
nlohmann::json to_json(const LengthParityReport& report);
nlohmann::json to_json(const ParityBlockReport& report);
nlohmann::json to_json(const PairDescriptor& pair);
nlohmann::json to_json(const PairTableReport& report);
nlohmann::json to_json(const CaseTableReport& report);

}  // namespace fockcalc
