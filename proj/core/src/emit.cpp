#include "sdnopt/emit.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sdnopt {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit: cannot open " + path + " for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("emit: cannot open " + path + " for reading");
  return in;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_aggregate_csv(const std::string& path, const aggregate_trace& agg) {
  auto out = open_out(path);
  out << "checkpoint_index,oracle_calls,median_l2,decile10_l2,decile90_l2\n";
  for (std::size_t i = 0; i < agg.grid.size(); ++i) {
    out << i << ',' << agg.grid[i] << ',' << format_double(agg.median[i]) << ','
        << format_double(agg.decile10[i]) << ',' << format_double(agg.decile90[i])
        << '\n';
  }
  if (!out) throw std::runtime_error("emit: write failed for " + path);
}

void write_aggregate_json(const std::string& path, const aggregate_trace& agg) {
  auto out = open_out(path);
  out << "{\n  \"checkpoints\": [";
  for (std::size_t i = 0; i < agg.grid.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"checkpoint_index\": " << i << ", \"oracle_calls\": " << agg.grid[i]
        << ", \"median_l2\": " << format_double(agg.median[i])
        << ", \"decile10_l2\": " << format_double(agg.decile10[i])
        << ", \"decile90_l2\": " << format_double(agg.decile90[i]) << "}";
  }
  out << (agg.grid.empty() ? "]\n}\n" : "\n  ]\n}\n");
  if (!out) throw std::runtime_error("emit: write failed for " + path);
}

void write_aggregate(const std::string& path, const aggregate_trace& agg,
                     emit_format format) {
  if (format == emit_format::csv) {
    write_aggregate_csv(path, agg);
  } else {
    write_aggregate_json(path, agg);
  }
}

void write_trials_csv(const std::string& path, const std::vector<error_trace>& traces) {
  auto out = open_out(path);
  out << "checkpoint_index,oracle_calls";
  char name[32];
  for (std::size_t j = 0; j < traces.size(); ++j) {
    std::snprintf(name, sizeof(name), "trial_%03zu", j);
    out << ',' << name;
  }
  out << '\n';
  if (traces.empty()) return;
  const auto& grid = traces.front().grid;
  for (const auto& tr : traces) {
    if (tr.grid != grid) throw std::invalid_argument("emit: misaligned trial grids");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << i << ',' << grid[i];
    for (const auto& tr : traces) out << ',' << format_double(tr.l2_error[i]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("emit: write failed for " + path);
}

aggregate_trace read_aggregate_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("emit: empty file " + path);
  aggregate_trace agg;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 5) throw std::runtime_error("emit: malformed row in " + path);
    agg.grid.push_back(std::stoll(cells[1]));
    agg.median.push_back(std::stod(cells[2]));
    agg.decile10.push_back(std::stod(cells[3]));
    agg.decile90.push_back(std::stod(cells[4]));
  }
  return agg;
}

std::vector<error_trace> read_trials_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("emit: empty file " + path);
  const auto header = split_csv(line);
  if (header.size() < 2) throw std::runtime_error("emit: malformed header in " + path);
  const std::size_t trials = header.size() - 2;
  std::vector<error_trace> traces(trials);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("emit: malformed row in " + path);
    }
    const std::int64_t unit = std::stoll(cells[1]);
    for (std::size_t j = 0; j < trials; ++j) {
      traces[j].grid.push_back(unit);
      traces[j].l2_error.push_back(std::stod(cells[j + 2]));
    }
  }
  return traces;
}

}  // namespace sdnopt
