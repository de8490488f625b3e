#pragma once

#include <string>

#include "json.hpp"
#include "nofactor/antitorus.hpp"
#include "nofactor/complex.hpp"
#include "nofactor/develop.hpp"
#include "nofactor/obstruction.hpp"
#include "nofactor/staircase.hpp"

namespace nofactor {

using json = nlohmann::json;

inline constexpr const char* kValidationSchema = "nofactor.validation/1";
inline constexpr const char* kCensusSchema = "nofactor.census/1";
inline constexpr const char* kRectangleSchema = "nofactor.rectangle/1";
inline constexpr const char* kAntiTorusSchema = "nofactor.antitorus/1";
inline constexpr const char* kGammaSchema = "nofactor.gamma/1";
inline constexpr const char* kObstructionSchema = "nofactor.obstruction/1";
inline constexpr const char* kWellSeparationSchema = "nofactor.wellsep/1";
inline constexpr const char* kCertificateSchema = "nofactor.nonacyl/1";

json to_json(const SquareComplex& complex, const ValidationReport& report);
json rectangle_to_json(const SquareComplex& complex, const Rectangle& rect);

void to_json(json& j, const SearchBounds& b);
void from_json(const json& j, SearchBounds& b);
void to_json(json& j, const GammaResult& g);
void from_json(const json& j, GammaResult& g);
void to_json(json& j, const ObstructionTable& t);
void from_json(const json& j, ObstructionTable& t);
void to_json(json& j, const WellSeparationResult& w);
void from_json(const json& j, WellSeparationResult& w);
void to_json(json& j, const StairParams& p);
void from_json(const json& j, StairParams& p);
void to_json(json& j, const NonAcylCertificate& c);
void from_json(const json& j, NonAcylCertificate& c);

/// "n,diam,L" rows.
std::string obstruction_csv(const ObstructionTable& table);

}  // namespace nofactor
