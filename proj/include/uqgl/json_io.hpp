#pragma once

#include "uqgl/rep.hpp"
#include "uqgl/verify.hpp"

#include <json.hpp>

#include <string>

namespace uqgl {

/// Serialises a representation bundle to the documented JSON layout:
/// metadata, explicit three-row basis-label objects, and row-major dense
/// matrices per generator.
nlohmann::json representation_to_json(const Representation& rep);

/// Reloads a dumped representation (reduced, induced or factor kind).
/// Throws std::invalid_argument on a malformed document.
Representation representation_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

nlohmann::json classification_to_json(const TypicalityReport& report);

/// Single matrix as CSV rows.
std::string matrix_to_csv(const Matrix& m);

}  // namespace uqgl
