#pragma once

#include <string>

#include <json.hpp>

#include "edcert/certify.hpp"

namespace edcert::cli {

/// Certificate in the exchange format. Every rational is an exact "num/den"
/// string; the witness is listed from a_0 to a_n.
nlohmann::json to_json(const Certificate& cert);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const EDReport& report);

struct VerifyResult {
    bool ok = false;
    std::string reason;
};

/// Re-parses a certificate document, recomputes act(input, transform) and the
/// Eisenstein-Dumas report, and compares both with the stored ones field by
/// field in serialized form.
VerifyResult verify_json(const nlohmann::json& doc);

} // namespace edcert::cli
