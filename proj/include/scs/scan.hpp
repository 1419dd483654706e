#pragma once

// Point evaluations, amplitude grid scans and their file formats
// (CSV, JSON, binary PGM).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scs/mixed.hpp"

namespace scs::scan {

/// Bad configuration or unparsable input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode { Pure, Mixed };

struct ScanConfig {
  Mode mode = Mode::Pure;
  SpinJ j1{1};
  SpinJ j2{1};
  double phi = 0.0;   ///< relative phase (component 1 in mixed mode)
  double phi2 = 0.0;  ///< component 2 phase, mixed mode
  double p1 = 0.5;
  double zmin = 0.0;
  double zmax = 3.0;
  int steps = 151;
  Complex z1b{1.0};  ///< fixed component-2 amplitudes, mixed mode
  Complex z2b{1.0};

  /// zmin >= 0, zmax > zmin, steps >= 2, p1 in [0, 1].
  void validate() const;
  double grid_value(int index) const;
};

/// Named parameter sets for the published amplitude scans: fig1a-fig1d and
/// fig2a-fig2c (pure, φ = 0, spins per panel), fig3 and fig4 (mixed,
/// comp2 amplitudes 1 and 4, p1 = p2 = 1/2, φ1 = φ2 = 0; spins untouched).
void apply_preset(std::string_view name, ScanConfig& config);
const std::vector<std::string>& preset_names();

struct MixedReport {
  double wootters;
  double simplified_spectral;
  double simplified_direct;
  ConcurrenceBounds bounds;
  CaseResult case_result;
  MixtureQuantities quantities;
};

MixedReport evaluate_mixed(const RankTwoMixture& m);

struct ScanRow {
  double z1 = 0.0;
  double z2 = 0.0;
  bool degenerate = false;
  double concurrence = 0.0;  ///< Wootters value in mixed mode
  // mixed mode only; simplified and bounds are squared concurrences
  double wootters = 0.0;
  double simplified = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  CaseLabel label = CaseLabel::Unclassified;
};

/// Component parameters for a grid point (z1, z2 are component-1
/// amplitudes in mixed mode).
EntangledScsParams pure_params(const ScanConfig& config, Complex z1,
                               Complex z2);
RankTwoMixture mixture_at(const ScanConfig& config, Complex z1, Complex z2);

ScanRow evaluate_row(const ScanConfig& config, double z1, double z2);

/// steps² rows ordered by (z1 index, z2 index). Rows are computed on
/// `threads` workers (0 = hardware concurrency); output order is fixed.
std::vector<ScanRow> run_scan(const ScanConfig& config, unsigned threads = 0);

std::size_t count_degenerate(const std::vector<ScanRow>& rows);

/// CSV with a header line, 9 significant digits, '\n' line endings.
/// Degenerate rows leave every computed cell empty.
std::string render_csv(const std::vector<ScanRow>& rows, Mode mode);

/// P5 image from scan CSV text: width = height = steps, row index = z1
/// index, pixel = round(255·concurrence), empty cells 0. Throws UsageError
/// on malformed input.
std::string csv_to_pgm(std::string_view csv);

std::string format_number(double value);

/// "re", "re+imi", "re-imi", "imi".
std::optional<Complex> parse_complex(std::string_view text);

struct PointRequest {
  Mode mode = Mode::Pure;
  EntangledScsParams comp1;
  EntangledScsParams comp2;
  double p1 = 0.5;
};

/// All computed quantities for one point. Throws DegenerateState.
nlohmann::ordered_json point_report(const PointRequest& request);

}  // namespace scs::scan
