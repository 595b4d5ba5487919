#pragma once

#include <cstdint>
#include <vector>

namespace sdnopt {

// Per-trial error trajectory resampled onto a shared checkpoint grid. The
// grid is in oracle-call units by default; an iteration-unit grid serves
// per-iteration comparison plots.
struct error_trace {
  std::vector<std::int64_t> grid;  // strictly increasing checkpoint positions
  std::vector<double> l2_error;    // ||x_t - x*||_2 at each checkpoint
  std::vector<double> fgap;        // optional objective gap; empty if unknown
};

// Per-checkpoint order statistics across trials.
struct aggregate_trace {
  std::vector<std::int64_t> grid;
  std::vector<double> median;
  std::vector<double> decile10;
  std::vector<double> decile90;
};

// Linearly interpolated empirical quantile of the common "type 7" kind;
// values need not be pre-sorted.
double quantile_type7(std::vector<double> values, double q);

// Order statistics per checkpoint. All traces must share one grid.
aggregate_trace aggregate(const std::vector<error_trace>& traces);

// count checkpoints spread linearly over [1, total_units]; count is clamped
// to total_units so the grid stays strictly increasing.
std::vector<std::int64_t> make_grid(std::int64_t total_units, int count);

// Collects per-iteration (unit, error) events and resamples them onto the
// grid with carry-forward semantics; the initial error covers checkpoints
// before the first event.
class trace_recorder {
 public:
  trace_recorder(std::vector<std::int64_t> grid, double initial_error,
                 double initial_fgap = -1.0);
  void record(std::int64_t unit, double l2_error, double fgap = -1.0);
  error_trace finish() const;

 private:
  std::vector<std::int64_t> grid_;
  double initial_error_;
  double initial_fgap_;
  std::vector<std::int64_t> units_;
  std::vector<double> errors_;
  std::vector<double> fgaps_;
};

}  // namespace sdnopt
