#pragma once

/**
 * @file jsonio.hpp
 * @brief JSON wire formats: arrangements, marked curves, fibration records,
 *        census and solver reports. Doubles are emitted as decimal strings
 *        with 17 significant digits so output is byte-stable.
 */

#include <orb/core.hpp>
#include <orb/curves.hpp>
#include <orb/enumfrac.hpp>
#include <orb/fibration.hpp>
#include <orb/rncsolver.hpp>

#include <json.hpp>

#include <string>

namespace orb {

using Json = nlohmann::ordered_json;

// ---- parsing ---------------------------------------------------------------

/// Accepts integers or "p/q" strings.
Rational rational_from_json(const Json& j);
/// Accepts integers, "p/q" strings, or "inf".
Multiplicity multiplicity_from_json(const Json& j);

/// {"n": int, "hyperplanes": [[rational]], "mults": [int|"p/q"|"inf"]}
ArrangementOrbifold arrangement_from_json(const Json& j);

/// {"genus": int, "contacts": [{"point": str, "pairs": [[j, t]]}]}
MarkedCurve curve_from_json(const Json& j);

/// [{"label": str, "components": [{"t": int, "m": int|"inf"}]}]
std::vector<BaseDivisorRecord> base_records_from_json(const Json& j);

/// "p0:p1:...:pn" with rational components.
RatVec point_from_string(const std::string& s);

/// "2,3,7,41" or "inf" entries.
std::vector<Multiplicity> mults_from_string(const std::string& s);

// ---- emitting ---------------------------------------------------------------

std::string format_double(double v);

Json to_json(const Rational& r);
Json to_json(const Multiplicity& m);
Json to_json(const ExtRational& e);
Json to_json(const mpz_class& z);          // number when it fits int64, else string
Json to_json(const cdouble& z);            // ["re", "im"] as strings
Json to_json(const UnitFractionTuple& t);
Json to_json(const ExceptionalCensus& c);
Json to_json(const CurveOrbifoldDivisor& d);
Json to_json(const UniruledVerdict& v);
Json to_json(const RncSolution& s);
Json to_json(const VerifyReport& r);

} // namespace orb
