#pragma once

#include "apc/product_code.hpp"
#include "apc/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace apc {

// Event counts for one channel use. Narrowband and fade row sets are drawn
// disjointly; all sets are drawn without replacement from the seeded
// generator.
struct NoiseConfig {
  int narrowband_rows = 0;  // rows forced to all-one
  int impulse_cols = 0;     // columns forced to all-one
  int fade_rows = 0;        // rows forced to all-zero
  int background_flips = 0; // independent bit flips
  std::uint64_t seed = 0;
};

struct NoiseEvents {
  std::vector<int> narrowband_rows;
  std::vector<int> fade_rows;
  std::vector<int> impulse_cols;
  std::vector<std::pair<int, int>> background_flips;
};

// Detector output grid over {0..p-1, kErased}.
class ReceivedMatrix {
 public:
  ReceivedMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    e_.assign(size_t(rows) * size_t(cols), 0);
  }
  static ReceivedMatrix from_bits(const FieldMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint8_t at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
  void set(int r, int c, std::uint8_t v) { e_[size_t(r) * cols_ + c] = v; }
  bool erased(int r, int c) const { return at(r, c) == kErased; }

 private:
  int rows_, cols_;
  std::vector<std::uint8_t> e_;
};

// Draws the event sets for an m x n grid. Order of draws is fixed:
// narrowband+fade rows (one combined draw, split then sorted), impulse
// columns, background cells.
NoiseEvents draw_noise_events(int m, int n, const NoiseConfig& cfg);

// Applies events in the order background, fade, narrowband, impulse.
// Binary codewords only.
FieldMatrix apply_noise_events(const FieldMatrix& word, const NoiseEvents& ev);

std::pair<FieldMatrix, NoiseEvents> apply_noise(const FieldMatrix& word,
                                                const NoiseConfig& cfg);

struct DecodeOptions {
  // 0: erasure-only decoding. -1: bounded-distance cleanup passes with
  // radius floor((d-1)/2) per component. >0: explicit radius for both.
  int background_radius = 0;
  int max_iters = 10;
  // Opt-in fade handling: mark all-zero rows as erasures. Off by default;
  // the baseline decoder handles narrowband and impulse noise only.
  bool mark_all_zero_rows = false;
};

enum class FailureKind { Ambiguous, Inconsistent };
enum class FailureAxis { Row, Column };

struct DecodeFailure {
  FailureKind kind;
  FailureAxis axis;
  int index;
};

struct ProductDecodeResult {
  std::optional<FieldMatrix> codeword;
  std::optional<DecodeFailure> failure;
  bool ok() const { return codeword.has_value(); }
};

// Channel decoder: all-one rows become erasures, then columns over {1, e},
// the coset leader is subtracted from the surviving cells, and the erased
// cells are recovered by erasure-decoding the columns against the column
// base code and then the rows against the row base code. Optional
// bounded-distance passes clean background flips before the erasure stage.
ProductDecodeResult decode_received(const ReceivedMatrix& received,
                                    const ProductCode& pc,
                                    const DecodeOptions& opts = {});

struct TrialFailure {
  int trial;
  std::uint64_t seed;
  std::string kind;  // "ambiguous" | "inconsistent" | "miscorrection"
  std::string axis;  // "row" | "column" | ""
  int index;         // -1 when not applicable
};

struct SimulationReport {
  std::uint64_t master_seed = 0;
  int trials = 0;
  int successes = 0;
  double success_rate = 0.0;
  std::vector<TrialFailure> failures;
};

// Monte-Carlo harness. Trial t runs from seed SplitMix64::derive(master, t):
// a uniform information block, one channel use, one decode. The report is a
// pure function of (code, template, trials, master_seed, options).
SimulationReport simulate(const ProductCode& pc, const NoiseConfig& tmpl,
                          int trials, std::uint64_t master_seed,
                          const DecodeOptions& opts = {});

std::string report_to_json(const SimulationReport& report);

struct WeightBoundsReport {
  int row_min, row_max, col_min, col_max;
};

// Exact row/column weight extrema over all codewords.
WeightBoundsReport weight_bounds_report(const ProductCode& pc);

struct GabidulinRow {
  int r;
  std::uint64_t product_dim;    // r^2
  std::uint64_t gabidulin_dim;  // 2^(r-1)
};

// Dimension comparison of the square-matrix constructions for r in
// [r_min, r_max].
std::vector<GabidulinRow> gabidulin_comparison(int r_min, int r_max);

}  // namespace apc
