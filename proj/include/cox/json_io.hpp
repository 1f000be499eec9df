#pragma once

#include <json.hpp>

#include "cox/centre.hpp"
#include "cox/conjugation.hpp"

namespace cox {

inline constexpr int kSchemaVersion = 1;

nlohmann::json element_to_json(const Group& g, const Element& w);
Element element_from_json(const Group& g, const nlohmann::json& j);

nlohmann::json classification_to_json(const CoxeterSystem& sys);

nlohmann::json growth_certificate_to_json(const Group& g, const Element& start,
                                          const GrowthCertificate& cert);
std::pair<Element, GrowthCertificate> growth_certificate_from_json(const Group& g,
                                                                   const nlohmann::json& j);

nlohmann::json zero_certificate_to_json(const Group& g, const ZeroPropagationCertificate& cert);
ZeroPropagationCertificate zero_certificate_from_json(const Group& g, const nlohmann::json& j);

nlohmann::json hecke_to_json(const Group& g, const RationalField& ring,
                             const HeckeElement<RationalField>& x);
nlohmann::json hecke_to_json(const Group& g, const GenericPolyRing& ring,
                             const HeckeElement<GenericPolyRing>& x);
nlohmann::json hecke_to_json(const Group& g, const LaurentRing& ring,
                             const HeckeElement<LaurentRing>& x);

nlohmann::json centre_report_to_json(const Group& g, const CentreReport& report);

}  // namespace cox
