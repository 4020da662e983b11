#pragma once

#include <string>

#include "json.hpp"
#include "wildsets/equivalence.hpp"

namespace wildsets {

nlohmann::ordered_json certificate_to_json(const Certificate& c);
/// Throws ParseError on schema violations.
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::ordered_json report_to_json(const VerificationReport& r);

std::string write_certificate(const Certificate& c);
Certificate read_certificate(const std::string& text);

}  // namespace wildsets
