#pragma once

// JSON interchange (norm specifications, point sets, certificates, reports,
// problem files), CSV emission and small file helpers.  Schemas are
// versioned; see docs/formats.md in the repository root.

#include "equinorm/certificate.hpp"
#include "equinorm/common.hpp"
#include "equinorm/equilateral.hpp"
#include "equinorm/fixedpoint.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"
#include "equinorm/renorm.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace equinorm {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const std::string& where);
Json matrix_rows_to_json(const Matrix& m);
Matrix matrix_rows_from_json(const Json& j, const std::string& where);

// Norm specifications: JSON objects with a "variant" discriminator.
// Malformed input throws invalid_input_error with the offending key.
Json norm_to_json(const NormPtr& spec);
NormPtr norm_from_json(const Json& j);

Json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);

Json functional_to_json(const DualFunctional& f);
DualFunctional functional_from_json(const Json& j);

Json certificate_to_json(const AntipodalCertificate& cert);
AntipodalCertificate certificate_from_json(const Json& j);

Json equilateral_report_to_json(const EquilateralReport& report);
Json fixed_point_state_to_json(const FixedPointState& state);
Json sandwich_audit_to_json(const SandwichAudit& audit);
Json renorm_result_to_json(const RenormResult& result);

/// Problem file consumed by the CLI: a norm, optional points, and command
/// parameters with defaults filled in.
struct ProblemFile {
  NormPtr norm;
  std::optional<PointSet> points;
  int n_points = 8;          // "N" for the fixed-point command
  double tol = 1e-10;
  int max_iter = 400;
  std::uint64_t seed = 0x5eed;
  double c2 = 1.0;
  int n_dirs = 1000;
};

Json problem_to_json(const ProblemFile& problem);
ProblemFile problem_from_json(const Json& j);

/// Distance matrix as CSV with a header row of labels.
std::string matrix_to_csv(const Matrix& m, const std::vector<std::string>& labels);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Parses a file as JSON, mapping parse errors to invalid_input_error with
/// the parser diagnostic.
Json read_json_file(const std::string& path);

}  // namespace equinorm
