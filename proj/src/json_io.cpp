#include "cox/json_io.hpp"

namespace cox {

using nlohmann::json;

json element_to_json(const Group& g, const Element& w) {
  json letters = json::array();
  for (std::uint8_t s : w.word) letters.push_back(g.system().label(s));
  return letters;
}

Element element_from_json(const Group& g, const json& j) {
  if (!j.is_array()) throw ParseError("element must be an array of generator labels");
  std::vector<int> letters;
  for (const auto& entry : j) {
    if (!entry.is_string()) throw ParseError("element letters must be strings");
    letters.push_back(g.system().generator_index(entry.get<std::string>()));
  }
  return g.from_word(letters);
}

json classification_to_json(const CoxeterSystem& sys) {
  const TypeClass& tc = sys.classification();
  json components = json::array();
  for (const GenSet& comp : tc.components) {
    json labels = json::array();
    for (int s : comp.members()) labels.push_back(sys.label(s));
    components.push_back(labels);
  }
  json classes = json::array();
  for (const GenSet& cls : sys.generator_classes()) {
    json labels = json::array();
    for (int s : cls.members()) labels.push_back(sys.label(s));
    classes.push_back(labels);
  }
  return {{"schema", kSchemaVersion},
          {"kind", to_string(tc.kind)},
          {"irreducible", tc.irreducible},
          {"compact_hyperbolic", tc.compact_hyperbolic},
          {"components", components},
          {"generator_classes", classes}};
}

namespace {

json step_to_json(const Group& g, const ConjugationStep& st) {
  return {{"generator", g.system().label(st.generator)},
          {"from", element_to_json(g, st.from)},
          {"to", element_to_json(g, st.to)},
          {"delta", st.delta}};
}

ConjugationStep step_from_json(const Group& g, const json& j) {
  ConjugationStep st;
  st.generator = g.system().generator_index(j.at("generator").get<std::string>());
  st.from = element_from_json(g, j.at("from"));
  st.to = element_from_json(g, j.at("to"));
  st.delta = j.at("delta").get<int>();
  return st;
}

}  // namespace

json growth_certificate_to_json(const Group& g, const Element& start,
                                const GrowthCertificate& cert) {
  json steps = json::array();
  for (const auto& st : cert.steps) steps.push_back(step_to_json(g, st));
  return {{"schema", kSchemaVersion},
          {"kind", "growth-certificate"},
          {"start", element_to_json(g, start)},
          {"steps", steps},
          {"gain", cert.gain}};
}

std::pair<Element, GrowthCertificate> growth_certificate_from_json(const Group& g, const json& j) {
  if (j.value("kind", "") != "growth-certificate")
    throw ParseError("not a growth certificate");
  GrowthCertificate cert;
  for (const auto& st : j.at("steps")) cert.steps.push_back(step_from_json(g, st));
  cert.gain = j.at("gain").get<int>();
  return {element_from_json(g, j.at("start")), std::move(cert)};
}

json zero_certificate_to_json(const Group& g, const ZeroPropagationCertificate& cert) {
  json steps = json::array();
  for (std::size_t i = 0; i < cert.steps.steps.size(); ++i) {
    json st = step_to_json(g, cert.steps.steps[i]);
    st["side"] = cert.sides[i] == ExchangeSide::Right ? "right" : "left";
    steps.push_back(std::move(st));
  }
  return {{"schema", kSchemaVersion},
          {"kind", "zero-propagation-certificate"},
          {"target", element_to_json(g, cert.target)},
          {"steps", steps}};
}

ZeroPropagationCertificate zero_certificate_from_json(const Group& g, const json& j) {
  if (j.value("kind", "") != "zero-propagation-certificate")
    throw ParseError("not a zero-propagation certificate");
  ZeroPropagationCertificate cert;
  cert.target = element_from_json(g, j.at("target"));
  for (const auto& st : j.at("steps")) {
    cert.steps.steps.push_back(step_from_json(g, st));
    std::string side = st.at("side").get<std::string>();
    if (side != "right" && side != "left") throw ParseError("bad exchange side");
    cert.sides.push_back(side == "right" ? ExchangeSide::Right : ExchangeSide::Left);
  }
  cert.steps.gain = cert.steps.steps.empty() ? 0 : cert.steps.steps.back().delta;
  return cert;
}

namespace {
template <class R>
json hecke_terms(const Group& g, const R& ring, const HeckeElement<R>& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.coeffs)
    terms.push_back({{"word", element_to_json(g, w)}, {"coefficient", ring.to_string(c)}});
  return terms;
}
}  // namespace

json hecke_to_json(const Group& g, const RationalField& ring,
                   const HeckeElement<RationalField>& x) {
  return {{"schema", kSchemaVersion}, {"ring", "rational"}, {"terms", hecke_terms(g, ring, x)}};
}
json hecke_to_json(const Group& g, const GenericPolyRing& ring,
                   const HeckeElement<GenericPolyRing>& x) {
  return {{"schema", kSchemaVersion}, {"ring", "generic"}, {"terms", hecke_terms(g, ring, x)}};
}
json hecke_to_json(const Group& g, const LaurentRing& ring,
                   const HeckeElement<LaurentRing>& x) {
  return {{"schema", kSchemaVersion}, {"ring", "laurent"}, {"terms", hecke_terms(g, ring, x)}};
}

json centre_report_to_json(const Group& g, const CentreReport& report) {
  json certs = json::array();
  for (const auto& cert : report.certificates) certs.push_back(zero_certificate_to_json(g, cert));
  return {{"schema", kSchemaVersion},
          {"radius", report.radius},
          {"ok", report.ok},
          {"kernel_dimensions", report.kernel_dimensions},
          {"certificates", certs},
          {"failure", report.failure}};
}

}  // namespace cox
