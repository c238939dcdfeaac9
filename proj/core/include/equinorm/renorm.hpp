#pragma once

// Antipodal renorming: from a bounded/separated antipodal set with
// certificate (1, c, d) build the gauge of
//   K = conv( (d/c) B_X  union  { +-(x_i - x_j) } ),
// under which every certified pair difference lies on the boundary of K
// (the set is 1-equilateral in the new norm) and the sandwich
// (d/c) B_X <= K <= 2 B_X bounds the Banach-Mazur distance by 2c/d.

#include "equinorm/biorthogonal.hpp"
#include "equinorm/certificate.hpp"
#include "equinorm/common.hpp"
#include "equinorm/norm.hpp"
#include "equinorm/pointset.hpp"

#include <cstdint>

namespace equinorm {

struct SandwichAudit {
  int n_dirs = 0;
  std::uint64_t seed = 0;
  double min_ratio = 0.0;   // min ||v||_K / ||v||  over sampled directions
  double max_ratio = 0.0;   // max ||v||_K / ||v||
  double lower_bound = 0.0; // required: ||v||_K >= lower_bound * ||v|| - tol
  double upper_bound = 0.0; // required: ||v||_K <= upper_bound * ||v|| + tol
  double tol = 0.0;
  bool pass = false;
};

struct RenormResult {
  NormPtr new_norm;              // gauge of K
  double rho = 0.0;              // d / c2
  double distortion_bound = 0.0; // 2 c2 / d
  SandwichAudit audit;
};

struct RenormOptions {
  double tol = 1e-6;
  int n_dirs = 1000;
  std::uint64_t seed = 0x5eed;
};

/// Builds the renorming gauge from a certificate with c1 = 1 (rescale first
/// otherwise; throws invalid_input_error).  Verifies the certificate and,
/// for each pair, that g = f_ij / margin supports K at x_j - x_i: the
/// difference is a generator of K (gauge distance <= 1) while g is bounded
/// by 1 on all of K and equals 1 there (gauge distance >= 1).
RenormResult build_antipodal_renorm(const NormPtr& spec, const PointSet& s,
                                    const AntipodalCertificate& cert,
                                    const RenormOptions& options = {});

/// Proposition-1 + Theorem-3 pipeline: certificate from a biorthogonal
/// system, Remark-3 rescaling to c1 = 1, then the renorming above.
RenormResult corollary_renorm(const BiorthogonalSystem& sys,
                              const NormPtr& spec,
                              const RenormOptions& options = {});

/// Samples n_dirs unit directions and audits the Banach-Mazur sandwich
/// (1/2) ||v|| <= ||v||_K <= (c/d) ||v||  with c/d = distortion_bound / 2.
SandwichAudit bm_bound_audit(const NormPtr& original, const RenormResult& result,
                             int n_dirs, std::uint64_t seed, double tol = 1e-9);

}  // namespace equinorm
