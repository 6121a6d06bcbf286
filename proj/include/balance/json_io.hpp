#pragma once

#include <json.hpp>

#include "balance/cert_spectral.hpp"
#include "balance/cert_traversal.hpp"
#include "balance/generators.hpp"
#include "balance/oracle.hpp"
#include "balance/rational.hpp"
#include "balance/scoring.hpp"

namespace balance {

using Json = nlohmann::ordered_json;

// Field names follow the schemas under docs/schemas.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Placement& p);
Json to_json(const ScoreReport& r);
Json to_json(const BalancednessVerdict& v);
Json to_json(const UnbalancednessAnswer& a);
Json to_json(const PlacementCount& c);
Json to_json(const TraversalCertificate& c);
TraversalCertificate traversal_certificate_from_json(const Json& j);
Json to_json(const SpectralCertificate& c);
Json to_json(const AcceptanceEstimate& e);
Json to_json(const ReducedInstance& r);
Json to_json(const DegreeStats& s);

}  // namespace balance
