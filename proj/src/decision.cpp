#include "newcomb/decision.hpp"

#include <cmath>
#include <string>

#include "newcomb/error.hpp"
#include "newcomb/kernels.hpp"

namespace newcomb {

namespace {

void check_utility(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError(std::string("utility ") + name +
                          " must be finite and >= 0, got " +
                          std::to_string(value));
  }
}

void check_probability(double value, const char* name) {
  // NaN fails both comparisons.
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError(std::string("probability ") + name +
                          " must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace

std::string_view to_string(CChoice c) {
  return c == CChoice::kC1 ? "C1" : "C2";
}

std::string_view to_string(SChoice s) {
  return s == SChoice::kS1 ? "S1" : "S2";
}

void validate(const UtilityMatrix& v) {
  check_utility(v.v11, "v11");
  check_utility(v.v12, "v12");
  check_utility(v.v21, "v21");
  check_utility(v.v22, "v22");
}

void validate(const PredictorProfile& p) {
  check_probability(p.p1, "p1");
  check_probability(p.p2, "p2");
}

RegionGrid::RegionGrid(int resolution) : resolution_(resolution) {
  if (resolution < 2) {
    throw ArgumentError("region resolution must be >= 2, got " +
                        std::to_string(resolution));
  }
  cells_.assign(static_cast<std::size_t>(resolution) *
                    static_cast<std::size_t>(resolution),
                CChoice::kC1);
}

ExpectedUtilities expected_utilities(const UtilityMatrix& v,
                                     const PredictorProfile& p) {
  validate(v);
  validate(p);
  return {v.v21 + p.p1 * (v.v11 - v.v21), v.v12 + p.p2 * (v.v22 - v.v12)};
}

CChoice choose(const UtilityMatrix& v, const PredictorProfile& p) {
  const auto [u1, u2] = expected_utilities(v, p);
  return u1 >= u2 ? CChoice::kC1 : CChoice::kC2;
}

DecisionBoundary decision_boundary(const UtilityMatrix& v) {
  validate(v);
  return {v.v11 - v.v21, v.v12 - v.v22, v.v12 - v.v21};
}

RegionGrid region_grid(const UtilityMatrix& v, int resolution,
                       int parallelism) {
  validate(v);
  RegionGrid grid(resolution);
  kernels::fill_region(v, grid, parallelism);
  return grid;
}

std::optional<CChoice> dominant_choice(const UtilityMatrix& v) {
  validate(v);
  if (v.v11 > v.v12 && v.v21 > v.v22) return CChoice::kC1;
  if (v.v12 > v.v11 && v.v22 > v.v21) return CChoice::kC2;
  return std::nullopt;
}

}  // namespace newcomb
