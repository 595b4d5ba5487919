#include "sdnopt/trace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdnopt {

double quantile_type7(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile: no values");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile: q outside [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * q;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= values.size()) return values.back();
  return values[lo] + (h - lo) * (values[lo + 1] - values[lo]);
}

aggregate_trace aggregate(const std::vector<error_trace>& traces) {
  if (traces.empty()) throw std::invalid_argument("aggregate: no traces");
  const auto& grid = traces.front().grid;
  for (const auto& tr : traces) {
    if (tr.grid != grid) throw std::invalid_argument("aggregate: misaligned grids");
    if (tr.l2_error.size() != grid.size()) {
      throw std::invalid_argument("aggregate: trace length != grid length");
    }
  }
  aggregate_trace agg;
  agg.grid = grid;
  agg.median.resize(grid.size());
  agg.decile10.resize(grid.size());
  agg.decile90.resize(grid.size());
  std::vector<double> column(traces.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < traces.size(); ++j) column[j] = traces[j].l2_error[i];
    agg.median[i] = quantile_type7(column, 0.5);
    agg.decile10[i] = quantile_type7(column, 0.1);
    agg.decile90[i] = quantile_type7(column, 0.9);
  }
  return agg;
}

std::vector<std::int64_t> make_grid(std::int64_t total_units, int count) {
  if (total_units < 1) throw std::invalid_argument("make_grid: no units");
  if (count < 1) throw std::invalid_argument("make_grid: need at least one checkpoint");
  const std::int64_t c = std::min<std::int64_t>(count, total_units);
  std::vector<std::int64_t> grid(c);
  for (std::int64_t i = 0; i < c; ++i) {
    grid[i] = (total_units * (i + 1)) / c;
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw std::logic_error("make_grid: grid not increasing");
  }
  return grid;
}

trace_recorder::trace_recorder(std::vector<std::int64_t> grid, double initial_error,
                               double initial_fgap)
    : grid_(std::move(grid)), initial_error_(initial_error), initial_fgap_(initial_fgap) {
  if (grid_.empty()) throw std::invalid_argument("trace_recorder: empty grid");
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (grid_[i] <= grid_[i - 1]) {
      throw std::invalid_argument("trace_recorder: grid must be strictly increasing");
    }
  }
}

void trace_recorder::record(std::int64_t unit, double l2_error, double fgap) {
  if (!units_.empty() && unit < units_.back()) {
    throw std::invalid_argument("trace_recorder: units must be nondecreasing");
  }
  units_.push_back(unit);
  errors_.push_back(l2_error);
  fgaps_.push_back(fgap);
}

error_trace trace_recorder::finish() const {
  error_trace tr;
  tr.grid = grid_;
  tr.l2_error.resize(grid_.size());
  const bool with_fgap = initial_fgap_ >= 0.0;
  if (with_fgap) tr.fgap.resize(grid_.size());
  std::size_t e = 0;
  double err = initial_error_;
  double gap = initial_fgap_;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    while (e < units_.size() && units_[e] <= grid_[i]) {
      err = errors_[e];
      gap = fgaps_[e];
      ++e;
    }
    tr.l2_error[i] = err;
    if (with_fgap) tr.fgap[i] = gap;
  }
  return tr;
}

}  // namespace sdnopt
