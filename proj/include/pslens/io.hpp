#pragma once

// JSON and CSV forms. Integers are JSON numbers when they fit in 64 bits and
// decimal strings otherwise; both are accepted when reading.

#include <string>
#include <vector>

#include "json.hpp"

#include "pslens/exact.hpp"
#include "pslens/family.hpp"
#include "pslens/laurent.hpp"
#include "pslens/lens.hpp"
#include "pslens/seifert.hpp"
#include "pslens/surgery.hpp"

namespace pslens::io {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& value);
Integer integer_from_json(const Json& j);

Json to_json(const std::vector<Integer>& values);

/// [[exp, coeff], ...] by descending exponent.
Json to_json(const LaurentPoly& poly);
LaurentPoly poly_from_json(const Json& j);

/// {"p": .., "q": ..}
Json to_json(const LensSpace& lens);
LensSpace lens_from_json(const Json& j);

/// Array of lens objects.
Json to_json(const LensSum& sum);
LensSum lens_sum_from_json(const Json& j);

/// [p, q]
Json to_json(const Slope& slope);
Slope slope_from_json(const Json& j);

Json to_json(const SeifertClass& cls);
Json to_json(const SurgeryResult& result);
Json to_json(const TunnelVerdict& verdict);
Json to_json(const HsphereClasses& classes);

/// Stable field order; polynomials in canonical text form.
Json to_json(const FamilyReport& report);

std::vector<std::string> csv_header();
std::vector<std::string> csv_row(const FamilyReport& report);
/// RFC 4180 quoting where needed.
std::string csv_line(const std::vector<std::string>& fields);

std::string set_to_string(const std::vector<Integer>& values);

/// Multi-line human-readable summary.
std::string to_text(const FamilyReport& report);

}  // namespace pslens::io
