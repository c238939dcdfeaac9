#include "equinorm/pointset.hpp"

#include <string>

namespace equinorm {

void validate_point_set(const PointSet& s) {
  require(!s.points.empty(), "point set is empty");
  const auto dim = s.points.front().size();
  require(dim > 0, "points must have positive dimension");
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const Vector& p = s.points[i];
    require(p.size() == dim, "point " + std::to_string(i) +
                                 " has dimension " + std::to_string(p.size()) +
                                 ", expected " + std::to_string(dim));
    require(is_finite(p), "point " + std::to_string(i) + " is not finite");
  }
  if (!s.labels.empty()) {
    require(s.labels.size() == s.points.size(),
            "label count does not match point count");
  }
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    for (std::size_t j = i + 1; j < s.points.size(); ++j) {
      require((s.points[i] - s.points[j]).lpNorm<Eigen::Infinity>() > 1e-12,
              "points " + std::to_string(i) + " and " + std::to_string(j) +
                  " coincide");
    }
  }
}

PointSet make_point_set(std::vector<Vector> points,
                        std::vector<std::string> labels) {
  PointSet s{std::move(points), std::move(labels)};
  validate_point_set(s);
  return s;
}

PointSet standard_basis_set(int n) {
  require(n >= 1, "basis size must be positive");
  PointSet s;
  s.points.reserve(static_cast<std::size_t>(n));
  s.labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e[i] = 1.0;
    s.points.push_back(std::move(e));
    s.labels.push_back("e" + std::to_string(i + 1));
  }
  return s;
}

PointSet hypercube_vertices(int n) {
  require(n >= 1 && n <= 20, "hypercube dimension out of range");
  PointSet s;
  const int count = 1 << n;
  s.points.reserve(static_cast<std::size_t>(count));
  s.labels.reserve(static_cast<std::size_t>(count));
  for (int mask = 0; mask < count; ++mask) {
    Vector v(n);
    std::string label;
    for (int k = 0; k < n; ++k) {
      // bit k of mask picks the sign of coordinate k; mask order is
      // lexicographic in (-1 before +1).
      bool plus = (mask >> (n - 1 - k)) & 1;
      v[k] = plus ? 1.0 : -1.0;
      label += plus ? '+' : '-';
    }
    s.points.push_back(std::move(v));
    s.labels.push_back(std::move(label));
  }
  return s;
}

Matrix pairwise_distance_matrix(const NormPtr& spec, const PointSet& s) {
  validate_point_set(s);
  const int n = s.size();
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dist = norm_eval(spec, s.points[static_cast<std::size_t>(i)] -
                                        s.points[static_cast<std::size_t>(j)]);
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  return d;
}

}  // namespace equinorm
