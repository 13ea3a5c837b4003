#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "knotvol/bounds.hpp"
#include "knotvol/bracket.hpp"
#include "knotvol/checkerboard.hpp"
#include "knotvol/diagram.hpp"
#include "knotvol/error.hpp"
#include "knotvol/jones.hpp"
#include "knotvol/twist.hpp"

namespace knotvol {

inline constexpr int kSchemaVersion = 1;

/// The diagram failed one of the validation gates.
class ValidationRejected : public Error {
 public:
  explicit ValidationRejected(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }
  const std::string& gate() const noexcept { return gate_; }

 private:
  ValidationReport report_;
  std::string gate_;
};

struct AnalysisOptions {
  bool color3 = false;
  std::size_t max_color3_crossings = 10;
  /// Over-budget J(3) requests become a warning instead of a ResourceError.
  bool skip_color3_over_budget = false;
  BracketOptions bracket{};
};

struct Analysis {
  std::string name;
  int crossings = 0;
  int components = 0;
  ValidationReport validation;
  bool twist_reduced = false;
  TwistProfile twists;
  DeltaBreakdown delta;
  int black_vertices = 0;
  int white_vertices = 0;
  GraphStats stats;
  std::vector<int> identity_mismatches;
  LaurentPolynomial j2;
  std::optional<LaurentPolynomial> j3;
  HeadTail h2;
  std::optional<HeadTail> h3;
  BoundsReport bounds;
  std::array<std::optional<long>, 3> residuals;
  bool residuals_ok = false;
  std::vector<std::string> warnings;
};

/// validate -> twists -> augmentation and triangular regions -> checkerboard
/// graphs -> polynomials -> bounds. Throws ValidationRejected on a failed gate.
Analysis analyze(const LinkDiagram& d, const std::string& name, const AnalysisOptions& options,
                 std::optional<double> reference_volume = std::nullopt);

nlohmann::ordered_json to_json(const Analysis& a);
std::string csv_header();
std::string to_csv_row(const Analysis& a);
std::string to_text(const Analysis& a);

}  // namespace knotvol
