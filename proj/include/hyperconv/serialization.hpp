#ifndef HYPERCONV_SERIALIZATION_HPP
#define HYPERCONV_SERIALIZATION_HPP

#include <string>

#include "hyperconv/hypergroup.hpp"
#include "hyperconv/semicharacter.hpp"
#include "hyperconv/sturm_liouville.hpp"

namespace hyperconv {

/// Decimal with 17 significant digits (round-trips doubles bit-exactly).
std::string format_double(double v);
std::string json_escape(const std::string& s);

/// CSV with header `coord,weight`; vector coords semicolon-separated inside
/// the first field.
std::string measure_to_csv(const Measure& mu);
/// JSON {"space_id": ..., "entries": [{"coord": ..., "weight": ...}]}.
std::string measure_to_json(const Measure& mu);

/// Parsers need the owning model to map coordinates back to ground points
/// (grid snapping); vector-coordinate entries only need the space tag.
Measure measure_from_csv(const Hypergroup& H, const std::string& csv);
Measure measure_from_json(const Hypergroup& H, const std::string& json);

/// Model descriptor:
///   {"kind": "chebyshev", "sample_limit"?}
///   {"kind": "bessel_kingman" | "hyperbolic", "h"?, "x_max"?}
///   {"kind": "double_coset", "table": [[...]], "subgroup": [...]}
HypergroupPtr model_from_json(const std::string& json);
std::string model_to_json(const std::string& kind, double h, double x_max);

/// Semicharacter descriptor, either compact ("cosh:s=1.3169579",
/// "bessel_sin:lambda=2", "one") or JSON ({"family": "cosh", "s": ...});
/// families: cosh, bessel_sin, bessel_sinh, hyperbolic_sin, hyperbolic_sinh,
/// sl_numeric (params profile=power|sinh2, k, lambda, rho), one.
Semicharacter semicharacter_from_descriptor(const Hypergroup& H,
                                            const std::string& descriptor);

/// SL profile descriptor: "power:k=2", "sinh2", or JSON
/// {"kind": "power"|"sinh2"|"table", ...} (table: {"step", "values", "k0"}).
SlProfilePtr sl_profile_from_descriptor(const std::string& descriptor);

}  // namespace hyperconv

#endif
