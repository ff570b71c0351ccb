#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "adet/configuration.hpp"
#include "adet/discriminant.hpp"
#include "adet/harness.hpp"
#include "adet/toric.hpp"

namespace adet {

using Json = nlohmann::json;

// ConfigFile: {"name": ..., "points": [[...]]} or {"name": ..., "aprime":
// [[...]]} with exactly one of points/aprime; aprime rows get a trailing 1.
std::pair<std::string, PointConfiguration> parse_config(const Json& j);
std::pair<std::string, PointConfiguration> parse_config_text(const std::string& text);

// QueryFile payload: list of exact rational strings of length d.
std::vector<Rat> parse_alpha(const Json& j, size_t d);

Json alpha_to_json(const std::vector<Rat>& alpha);
Json face_to_json(const Face& f);
Json lattice_to_json(const std::string& name, const PointConfiguration& a,
                     const FaceLattice& lattice);
Json toric_to_json(const std::string& name, const ToricIdeal& toric);
Json membership_to_json(const std::vector<Rat>& alpha, const MembershipVerdict& v);
Json profile_to_json(const HilbertProfile& p);
Json finiteness_to_json(const std::vector<Rat>& alpha, const FinitenessReport& r);
Json face_discriminant_to_json(const PointConfiguration& a, const FaceDiscriminant& fd);
Json ea_support_to_json(const PointConfiguration& a, const EASupport& s);
Json report_to_json(const VerificationReport& r);
Json error_to_json(const Error& e);

}  // namespace adet
