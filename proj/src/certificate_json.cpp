#include "wildsets/certificate_json.hpp"

#include "wildsets/errors.hpp"
#include "wildsets/text.hpp"

namespace wildsets {

namespace {

using ojson = nlohmann::ordered_json;

ojson places_json(const std::vector<Place>& P) {
  ojson a = ojson::array();
  for (const auto& p : P) a.push_back(format_place(p));
  return a;
}

ojson elements_json(const std::vector<FieldElement>& xs) {
  ojson a = ojson::array();
  for (const auto& x : xs) a.push_back(format_element(x));
  return a;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("certificate lacks '") + key + "'");
  return j.at(key);
}

std::vector<std::string> strings(const nlohmann::json& j, const char* key) {
  const auto& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& s : a) {
    if (!s.is_string()) throw ParseError(std::string("entries of '") + key + "' must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

ojson certificate_to_json(const Certificate& c) {
  ojson j;
  j["type"] = c.kind == CertKind::Pre ? "pre" : "small";
  j["backend"] = c.X->is_elliptic() ? "elliptic" : "p1";
  j["q"] = c.X->field()->q();
  if (c.X->is_elliptic()) {
    ojson f = ojson::array();
    for (int i = 0; i <= c.X->f().degree(); ++i)
      f.push_back(format_scalar(*c.X->field(), c.X->f().coeff(static_cast<std::size_t>(i))));
    j["curve"] = f;
  }
  j["S"] = places_json(c.S);
  j["T"] = places_json(c.T);
  j["quotient_basis"] = elements_json(c.basis);
  j["quotient_images"] = elements_json(c.images);
  ojson maps = ojson::array();
  for (const auto& m : c.local_maps) {
    ojson e;
    e["place"] = format_place(m.source);
    e["image_of_u"] = to_string(m.image_u);
    e["image_of_pi"] = to_string(m.image_pi);
    if (m.image_upi) e["image_of_upi"] = to_string(*m.image_upi);
    maps.push_back(e);
  }
  j["local_maps"] = maps;
  if (c.claimed_wild) j["claimed_wild_set"] = places_json(*c.claimed_wild);
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("certificate must be a JSON object");
    Certificate c;
    const std::string type = j.value("type", "small");
    if (type == "pre") c.kind = CertKind::Pre;
    else if (type == "small") c.kind = CertKind::Small;
    else throw ParseError("unknown certificate type '" + type + "'");
    const auto& q = field(j, "q");
    if (!q.is_number_unsigned()) throw ParseError("'q' must be a positive integer");
    FieldPtr F;
    try {
      F = FiniteField::make(q.get<std::uint32_t>());
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
    const std::string backend = field(j, "backend").get<std::string>();
    std::string curve;
    if (backend == "elliptic") {
      for (const auto& s : strings(j, "curve")) curve += (curve.empty() ? "" : ",") + s;
      if (curve.empty()) throw ParseError("elliptic backend needs a curve");
    } else if (backend != "p1") {
      throw ParseError("unknown backend '" + backend + "'");
    }
    c.X = make_curve(F, curve);
    for (const auto& s : strings(j, "S")) c.S.push_back(parse_place(*c.X, s));
    for (const auto& s : strings(j, "T")) c.T.push_back(parse_place(*c.X, s));
    for (const auto& s : strings(j, "quotient_basis")) c.basis.push_back(parse_element(*c.X, s));
    for (const auto& s : strings(j, "quotient_images")) c.images.push_back(parse_element(*c.X, s));
    const auto& maps = field(j, "local_maps");
    if (!maps.is_array()) throw ParseError("'local_maps' must be an array");
    for (const auto& m : maps) {
      LocalMap lm;
      lm.source = parse_place(*c.X, field(m, "place").get<std::string>());
      const auto i = c.index_of(lm.source);
      if (!i || *i >= c.T.size()) throw ParseError("local map at a place outside S");
      lm.target = c.T[*i];
      lm.image_u = local_class_from_string(field(m, "image_of_u").get<std::string>());
      lm.image_pi = local_class_from_string(field(m, "image_of_pi").get<std::string>());
      if (m.contains("image_of_upi")) lm.image_upi = local_class_from_string(m.at("image_of_upi").get<std::string>());
      c.local_maps.push_back(lm);
    }
    // Local maps are stored in S order.
    std::vector<LocalMap> ordered;
    for (const auto& p : c.S)
      for (const auto& lm : c.local_maps)
        if (lm.source == p) ordered.push_back(lm);
    if (ordered.size() == c.local_maps.size()) c.local_maps = ordered;
    if (j.contains("claimed_wild_set")) {
      std::vector<Place> w;
      for (const auto& s : strings(j, "claimed_wild_set")) w.push_back(parse_place(*c.X, s));
      c.claimed_wild = w;
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

ojson report_to_json(const VerificationReport& r) {
  ojson j;
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson e;
    e["name"] = c.name;
    e["ok"] = c.ok;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["wild_set"] = places_json(r.wild);
  j["verified"] = r.ok();
  return j;
}

std::string write_certificate(const Certificate& c) { return certificate_to_json(c).dump(2) + "\n"; }

Certificate read_certificate(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace wildsets
