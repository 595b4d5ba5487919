#pragma once

#include <string>
#include <vector>

#include "sdnopt/trace.hpp"

namespace sdnopt {

enum class emit_format { csv, json };

// Doubles are serialized with 17 significant digits so a write-then-parse
// round trip is bitwise exact.
std::string format_double(double v);

// Columns: checkpoint_index, oracle_calls, median_l2, decile10_l2,
// decile90_l2. An aggregate with no checkpoints yields a header-only file.
void write_aggregate_csv(const std::string& path, const aggregate_trace& agg);
void write_aggregate_json(const std::string& path, const aggregate_trace& agg);
void write_aggregate(const std::string& path, const aggregate_trace& agg,
                     emit_format format);

// Wide per-trial table: checkpoint_index, oracle_calls, trial_000, ...
void write_trials_csv(const std::string& path, const std::vector<error_trace>& traces);

aggregate_trace read_aggregate_csv(const std::string& path);
std::vector<error_trace> read_trials_csv(const std::string& path);

}  // namespace sdnopt
