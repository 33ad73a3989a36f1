#ifndef TVB_JSON_IO_HPP
#define TVB_JSON_IO_HPP

#include "tvb/barycenter.hpp"
#include "tvb/polytope.hpp"
#include "tvb/simplicial_complex.hpp"
#include "tvb/tverberg.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace tvb {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Canonical serialization: sorted keys (nlohmann's default object storage),
/// two-space indent, trailing newline. Byte-identical for equal documents.
std::string canonical_dump(const Json& doc);

/// FNV-1a 64-bit hash of the canonical dump, as 16 hex digits. Outputs embed
/// this so certificates cannot be verified against the wrong instance.
std::string problem_hash(const Json& problem);

Json load_json_file(const std::string& path);

/// Writes atomically: temp file in the same directory, then rename.
void write_json_atomic(const std::string& path, const Json& doc);

/// Rational coordinates serialize as strings "p/q" (or "p"); parsing accepts
/// strings ("p/q", decimals) and JSON integers. Floating JSON numbers are
/// converted exactly from their binary value; prefer strings in files.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json rational_vector_to_json(const RatVector& v);
RatVector rational_vector_from_json(const Json& j);

/// Polytope file: { "dim": d, "vertices": [[rationals]],
///                  "faces": optional [[vertex indices]] }.
Polytope polytope_from_json(const Json& j);
Json polytope_to_json(const Polytope& P);

/// Configuration file: { "dim": d, "points": [[rationals]],
///                       "colors": optional [ids] }.
PointConfiguration config_from_json(const Json& j);
Json config_to_json(const PointConfiguration& cfg);
std::optional<std::vector<int>> colors_from_json(const Json& j);

/// Complex file: { "vertices": n, "facets": [[...]] }.
SimplicialComplex complex_from_json(const Json& j);

Json barycenter_certificate_to_json(const BarycenterCertificate& cert);
BarycenterCertificate barycenter_certificate_from_json(const Json& j);
Json tverberg_certificate_to_json(const TverbergCertificate& cert);
TverbergCertificate tverberg_certificate_from_json(const Json& j);

}  // namespace tvb

#endif
