#pragma once

// JSON reports. Rationals are strings "p" or "p/q"; key order is fixed.

#include <json.hpp>

#include "kstab/blowup.hpp"
#include "kstab/chow.hpp"
#include "kstab/pipeline.hpp"

namespace kstab {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const LatticeVector& v);
Json to_json(const PointSupport& q);
Json to_json(const ToricTestConfig& tc);
Json to_json(const DFReport& r);
Json to_json(const ChowWeightReport& r);
Json to_json(const ChowCandidate& c);
Json to_json(const BlowupExpansionReport& r);
Json to_json(const DestabilizationCertificate& c);
Json to_json(const DestabilizeResult& r);
Json to_json(const SearchResult& r);

}  // namespace kstab
