#include "equinorm/problem_io.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace equinorm {

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vector vector_from_json(const Json& j, const std::string& where) {
  require(j.is_array() && !j.empty(), where + ": expected a nonempty array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_number(), where + ": entry " + std::to_string(i) +
                                  " is not a number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

Json matrix_rows_to_json(const Matrix& m) {
  Json arr = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    arr.push_back(vector_to_json(m.row(r).transpose()));
  return arr;
}

Matrix matrix_rows_from_json(const Json& j, const std::string& where) {
  require(j.is_array() && !j.empty(), where + ": expected a nonempty array");
  std::vector<Vector> rows;
  rows.reserve(j.size());
  for (std::size_t r = 0; r < j.size(); ++r)
    rows.push_back(vector_from_json(j[r], where + "[" + std::to_string(r) + "]"));
  Matrix m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == m.cols(), where + ": ragged rows");
    m.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  }
  return m;
}

namespace {

double p_from_json(const Json& j) {
  if (j.is_string()) {
    require(j.get<std::string>() == "inf",
            "lp: p must be a number in [1, inf) or the string \"inf\"");
    return std::numeric_limits<double>::infinity();
  }
  require(j.is_number(), "lp: p must be a number or \"inf\"");
  return j.get<double>();
}

Json p_to_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

}  // namespace

Json norm_to_json(const NormPtr& spec) {
  require(spec != nullptr, "norm_to_json: null spec");
  Json j;
  const std::string kind = spec->kind();
  j["variant"] = kind;
  if (kind == "lp") {
    const auto* lp = static_cast<const LpNorm*>(spec.get());
    j["dim"] = lp->dim();
    j["p"] = p_to_json(lp->p());
  } else if (kind == "polyhedral") {
    const auto* poly = static_cast<const PolyhedralNorm*>(spec.get());
    j["facets"] = matrix_rows_to_json(poly->facets());
  } else if (kind == "scaled") {
    const auto* sc = static_cast<const ScaledNorm*>(spec.get());
    j["factor"] = sc->alpha();
    j["base"] = norm_to_json(sc->base());
  } else if (kind == "max_of") {
    const auto* mx = static_cast<const MaxOfNorm*>(spec.get());
    Json branches = Json::array();
    for (const NormPtr& b : mx->branches()) branches.push_back(norm_to_json(b));
    j["branches"] = branches;
  } else if (kind == "hull_gauge") {
    const auto* hull = static_cast<const HullGaugeNorm*>(spec.get());
    j["rho"] = hull->rho();
    j["ambient"] = norm_to_json(hull->ambient());
    // Generators are serialized after construction-time folding and
    // deduplication, so parsing re-creates the identical object.
    j["generators"] = matrix_rows_to_json(hull->generator_matrix().transpose());
  } else if (kind == "subspace_extension") {
    const auto* ext = static_cast<const SubspaceExtensionNorm*>(spec.get());
    j["ambient"] = norm_to_json(ext->ambient());
    j["basis"] = matrix_rows_to_json(ext->basis().transpose());
    j["coeff_norm"] = norm_to_json(ext->coeff_norm());
    j["c2"] = ext->c2();
    j["extended_functionals"] = matrix_rows_to_json(ext->extended_functionals());
    j["extension_norms"] = vector_to_json(ext->extension_norms());
  } else if (kind == "spreading_composite") {
    const auto* sp = static_cast<const SpreadingCompositeNorm*>(spec.get());
    j["base"] = norm_to_json(sp->base());
    j["model"] = norm_to_json(sp->model());
    j["m"] = sp->m();
    j["eps"] = sp->eps();
    j["allow_exhaustive"] = sp->allow_exhaustive();
  } else {
    throw invalid_input_error("norm_to_json: unknown variant " + kind);
  }
  return j;
}

NormPtr norm_from_json(const Json& j) {
  require(j.is_object(), "norm: expected a JSON object");
  require(j.contains("variant") && j["variant"].is_string(),
          "norm: missing string field \"variant\"");
  const std::string variant = j["variant"].get<std::string>();

  auto need = [&](const char* key) -> const Json& {
    require(j.contains(key),
            "norm variant \"" + variant + "\": missing field \"" + key + "\"");
    return j.at(key);
  };

  if (variant == "lp") {
    const Json& dim = need("dim");
    require(dim.is_number_integer() && dim.get<int>() >= 1,
            "lp: dim must be a positive integer");
    return make_lp_norm(dim.get<int>(), p_from_json(need("p")));
  }
  if (variant == "polyhedral") {
    return make_polyhedral_norm(matrix_rows_from_json(need("facets"), "facets"));
  }
  if (variant == "scaled") {
    const Json& factor = need("factor");
    require(factor.is_number(), "scaled: factor must be a number");
    return make_scaled_norm(factor.get<double>(), norm_from_json(need("base")));
  }
  if (variant == "max_of") {
    const Json& branches = need("branches");
    require(branches.is_array() && !branches.empty(),
            "max_of: branches must be a nonempty array");
    std::vector<NormPtr> parsed;
    parsed.reserve(branches.size());
    for (const Json& b : branches) parsed.push_back(norm_from_json(b));
    return make_max_norm(std::move(parsed));
  }
  if (variant == "hull_gauge") {
    const Json& rho = need("rho");
    require(rho.is_number() && rho.get<double>() > 0.0,
            "hull_gauge: rho must be a positive number");
    NormPtr ambient = norm_from_json(need("ambient"));
    std::vector<Vector> generators;
    const Json& gens = need("generators");
    require(gens.is_array(), "hull_gauge: generators must be an array");
    for (std::size_t k = 0; k < gens.size(); ++k)
      generators.push_back(
          vector_from_json(gens[k], "generators[" + std::to_string(k) + "]"));
    return make_hull_gauge(std::move(ambient), generators, rho.get<double>());
  }
  if (variant == "subspace_extension") {
    NormPtr ambient = norm_from_json(need("ambient"));
    Matrix basis = matrix_rows_from_json(need("basis"), "basis").transpose();
    NormPtr coeff = norm_from_json(need("coeff_norm"));
    const Json& c2 = need("c2");
    require(c2.is_number() && c2.get<double>() > 0.0,
            "subspace_extension: c2 must be a positive number");
    Matrix ext = matrix_rows_from_json(need("extended_functionals"),
                                       "extended_functionals");
    Vector norms = vector_from_json(need("extension_norms"), "extension_norms");
    // The stored functionals are re-used verbatim: parsing does not re-run
    // the extension solve.
    return std::make_shared<SubspaceExtensionNorm>(
        std::move(ambient), std::move(basis), std::move(coeff),
        c2.get<double>(), std::move(ext), std::move(norms));
  }
  if (variant == "spreading_composite") {
    NormPtr base = norm_from_json(need("base"));
    NormPtr model = norm_from_json(need("model"));
    const Json& m = need("m");
    const Json& eps = need("eps");
    require(m.is_number_integer(), "spreading_composite: m must be an integer");
    require(eps.is_number(), "spreading_composite: eps must be a number");
    bool allow_exhaustive = false;
    if (j.contains("allow_exhaustive")) {
      require(j["allow_exhaustive"].is_boolean(),
              "spreading_composite: allow_exhaustive must be a boolean");
      allow_exhaustive = j["allow_exhaustive"].get<bool>();
    }
    return make_spreading_composite(std::move(base), eps.get<double>(),
                                    m.get<int>(), std::move(model),
                                    allow_exhaustive);
  }
  throw invalid_input_error("norm: unknown variant \"" + variant + "\"");
}

}  // namespace equinorm
