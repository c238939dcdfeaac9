#pragma once

// Ordered finite point configurations with optional labels.

#include "equinorm/common.hpp"
#include "equinorm/norm.hpp"

#include <string>
#include <vector>

namespace equinorm {

struct PointSet {
  std::vector<Vector> points;
  std::vector<std::string> labels;  // empty, or one label per point

  int size() const { return static_cast<int>(points.size()); }
  int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

/// Validates dimensions, finiteness, label count and pairwise distinctness
/// (sup-distance > 1e-12).  Throws invalid_input_error on violation.
void validate_point_set(const PointSet& s);

PointSet make_point_set(std::vector<Vector> points,
                        std::vector<std::string> labels = {});

/// e_1, ..., e_n with labels "e1".."en".
PointSet standard_basis_set(int n);

/// All 2^n sign vectors in {-1, +1}^n, lexicographic, labeled by sign pattern.
PointSet hypercube_vertices(int n);

Matrix pairwise_distance_matrix(const NormPtr& spec, const PointSet& s);

}  // namespace equinorm
