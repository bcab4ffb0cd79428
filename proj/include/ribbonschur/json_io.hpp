#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ribbonschur/criteria.hpp"
#include "ribbonschur/equivalence.hpp"
#include "ribbonschur/lr.hpp"
#include "ribbonschur/verify.hpp"

namespace ribbonschur {

// JSON payloads used by the C API and the CLI; field names are stable.

nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const SchurExpansion& expansion);
nlohmann::json to_json(const WitnessReport& report);
nlohmann::json to_json(const EquivalenceReport& report, const Partition& alpha);
nlohmann::json to_json(const ScanResult& result);

nlohmann::json support_json(const Partition& alpha, const std::vector<int>& p);
nlohmann::json positivity_json(const Partition& alpha, const std::vector<int>& p,
                               const Partition& nu, bool with_companion);
nlohmann::json verify_json(const std::vector<ScanResult>& results);

}  // namespace ribbonschur
