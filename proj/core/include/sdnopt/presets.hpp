#pragma once

#include <string>
#include <vector>

#include "sdnopt/experiment.hpp"

namespace sdnopt {

struct preset_info {
  std::string name;
  std::string description;
  std::string spec_json;
};

const std::vector<preset_info>& presets();

// nullptr when no preset carries that name.
const preset_info* find_preset(const std::string& name);

// Loads a preset by name, or falls back to load_spec (path or inline JSON).
experiment_spec load_spec_or_preset(const std::string& arg);

}  // namespace sdnopt
