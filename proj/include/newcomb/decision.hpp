#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace newcomb {

enum class CChoice { kC1, kC2 };
enum class SChoice { kS1, kS2 };

std::string_view to_string(CChoice c);
std::string_view to_string(SChoice s);

// 2x2 payoff table in euros. Rows are S's move, columns are C's move.
struct UtilityMatrix {
  double v11 = 0.0;
  double v12 = 0.0;
  double v21 = 0.0;
  double v22 = 0.0;

  double at(SChoice s, CChoice c) const {
    if (s == SChoice::kS1) return c == CChoice::kC1 ? v11 : v12;
    return c == CChoice::kC1 ? v21 : v22;
  }

  // 10000 / 0 / 1010000 / 1000000.
  static constexpr UtilityMatrix classic() {
    return {10000.0, 0.0, 1010000.0, 1000000.0};
  }

  friend bool operator==(const UtilityMatrix&, const UtilityMatrix&) = default;
};

// Predictor accuracies p1 = P(S1 | C1) and p2 = P(S2 | C2).
struct PredictorProfile {
  double p1 = 0.0;
  double p2 = 0.0;

  // P(S = S1 | C = c). The complement of p2 when C plays C2.
  double prob_s1_given(CChoice c) const {
    return c == CChoice::kC1 ? p1 : 1.0 - p2;
  }

  friend bool operator==(const PredictorProfile&,
                         const PredictorProfile&) = default;
};

// Throw ValidationError naming the offending field.
void validate(const UtilityMatrix& v);
void validate(const PredictorProfile& p);

struct ExpectedUtilities {
  double u1 = 0.0;
  double u2 = 0.0;
};

// Choose C1 iff a1*p1 + a2*p2 >= b.
struct DecisionBoundary {
  double a1 = 0.0;
  double a2 = 0.0;
  double b = 0.0;

  bool prefers_c1(const PredictorProfile& p) const {
    return a1 * p.p1 + a2 * p.p2 >= b;
  }
};

// Choices over an inclusive uniform grid of [0,1]^2. Index i runs along p1,
// j along p2; storage is row-major with p1 fastest.
class RegionGrid {
 public:
  explicit RegionGrid(int resolution);

  int resolution() const { return resolution_; }
  std::size_t size() const { return cells_.size(); }

  double coordinate(int index) const {
    return static_cast<double>(index) / static_cast<double>(resolution_ - 1);
  }
  CChoice at(int i, int j) const { return cells_[offset(i, j)]; }
  void set(int i, int j, CChoice c) { cells_[offset(i, j)] = c; }

  const std::vector<CChoice>& cells() const { return cells_; }

  friend bool operator==(const RegionGrid&, const RegionGrid&) = default;

 private:
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(resolution_) +
           static_cast<std::size_t>(i);
  }

  int resolution_;
  std::vector<CChoice> cells_;
};

ExpectedUtilities expected_utilities(const UtilityMatrix& v,
                                     const PredictorProfile& p);

// C1 iff U1 >= U2. Ties go to C1; there is no epsilon band.
CChoice choose(const UtilityMatrix& v, const PredictorProfile& p);

// a1 = v11 - v21, a2 = v12 - v22, b = v12 - v21.
DecisionBoundary decision_boundary(const UtilityMatrix& v);

// Evaluates choose() at every grid cell. `parallelism` <= 0 uses the OpenMP
// default thread count. Throws ArgumentError for resolution < 2.
RegionGrid region_grid(const UtilityMatrix& v, int resolution,
                       int parallelism = 0);

// Strict column dominance; nullopt when neither column dominates.
std::optional<CChoice> dominant_choice(const UtilityMatrix& v);

}  // namespace newcomb
