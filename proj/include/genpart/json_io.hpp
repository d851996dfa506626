#pragma once

#include <json.hpp>

#include "genpart/congruence.hpp"
#include "genpart/exponent_vector.hpp"

// nlohmann/json hooks for the certificate schema shared by the CLI and the
// corpus report. Vectors serialize densely, e.g. [2,0,0,4].
namespace genpart {

void to_json(nlohmann::json& j, const ExponentVector& e);
void from_json(const nlohmann::json& j, ExponentVector& e);

void to_json(nlohmann::json& j, const CongruenceClaim& c);
void from_json(const nlohmann::json& j, CongruenceClaim& c);

void to_json(nlohmann::json& j, const EtaDatum& d);
void from_json(const nlohmann::json& j, EtaDatum& d);

void to_json(nlohmann::json& j, const Counterexample& c);
void from_json(const nlohmann::json& j, Counterexample& c);

void to_json(nlohmann::json& j, const SturmCertificate& c);
void from_json(const nlohmann::json& j, SturmCertificate& c);

}  // namespace genpart
