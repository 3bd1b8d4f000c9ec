#pragma once

#include <json.hpp>

#include "berkline/berkovich.hpp"
#include "berkline/degeneration.hpp"
#include "berkline/real_locus.hpp"
#include "berkline/real_spectrum.hpp"

namespace berkline {

using Json = nlohmann::json;

// Thrown for structurally invalid job input (maps to exit code 2).
struct input_error : error {
    using error::error;
};

// Strict object access: every key must be consumed, unknown keys reject.
class StrictObject {
public:
    explicit StrictObject(const Json& j, std::string where);
    ~StrictObject() = default;

    const Json& require(const std::string& key);
    const Json* optional(const std::string& key);
    void finish(); // throws input_error if any key was never consumed

private:
    const Json& j_;
    std::string where_;
    std::vector<std::string> seen_;
};

// Scalars of K and F.  A bare string is a real literal; a {re, im} object
// is a point of K(sqrt(-1)).
PuiseuxNumber parse_scalar_k(const Json& j, const std::string& where);
ComplexPuiseux parse_scalar_f(const Json& j, const std::string& where);
Json scalar_to_json(const PuiseuxNumber& v);
Json scalar_to_json(const ComplexPuiseux& v);

// Berkovich points: {"chart": "Z"|"W", "kind": "type1"|"disk"|"infinity",
// "center": scalar, "log_radius": "p/q"}.  Chart-W disks are normalized to
// the canonical chart-Z form on input.
BerkPoint parse_point(const Json& j);
Json point_to_json(const BerkPoint& p);

// Polynomials over K: ascending coefficient list of literals.
PolyK parse_poly_k(const Json& j, const std::string& where);
PolyF parse_poly_f(const Json& j, const std::string& where);
Json poly_to_json(const PolyK& f);

// Spectrum points: {"kind": "point"|"right_of"|"left_of"|"plus_inf"|
// "minus_inf"|"free_cut", "u": literal, "ladder": [...], "budget": int}.
SpectrumLinePoint parse_spectrum_point(const Json& j);
Json spectrum_point_to_json(const SpectrumLinePoint& p);

MoebiusMap parse_moebius(const Json& j, const std::string& where);
Json moebius_to_json(const MoebiusMap& g);

Matrix parse_matrix_r(const Json& j, int n, const std::string& where);
RepTupleR parse_rep_r(const Json& j, const std::string& where);
RepTupleK parse_rep_k(const Json& j, const std::string& where);

DegenerationJob parse_degeneration_job(const Json& j, const std::string& where);

Json log_value_to_json(const LogValue& v);
Json realness_to_json(const RealnessCertificate& c);

// A job file: {"version": 1, "command": "...", "payload": {...}}.  Returns
// the payload after validating version and, when expected_command is
// nonempty, the command.  Bare payloads (no version/command keys) pass
// through untouched.
Json unwrap_job(const Json& j, const std::string& expected_command);

Json parse_json_file(const std::string& path);

} // namespace berkline
