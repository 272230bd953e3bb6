#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "millkit/core/types.hpp"

namespace millkit {

// Closed input range used by the static analyses and by random input
// generation. These are audit-facing bounds, not simulation limits.
struct InputRange {
  std::string_view key;
  double lo;
  double hi;
};

inline constexpr std::size_t kNumInputKeys = 10;

// Audit-facing value ranges for the ten controller inputs. The velocity/hr
// action bounds live in types.hpp; these bound what a controller may observe.
inline constexpr std::array<InputRange, kNumInputKeys> kInputRanges = {{
    {"current_thickness", 5.0, 110.0},
    {"target_thickness", 5.0, 15.0},
    {"hr_limit", 20.0, 50.0},
    {"stock_temperature", 800.0, 1523.0},
    {"target_temperature", 1073.0, 1273.0},
    {"current_grain_size", 5.0, 500.0},
    {"target_grain_size", 5.0, 25.0},
    {"rolling_force", -100.0, 4.0e6},
    {"rolling_torque", -100.0, 1.3e5},
    {"step_count", 0.0, 25.0},
}};

// Scalar mask accessor plus the two always-false level-0 validity flags; the
// only mask state a controller can observe.
inline constexpr std::string_view kMaskMaxValidHrIdx = "max_valid_hr_idx";
inline constexpr std::string_view kMaskInterpassZeroValid = "interpass_zero_valid";
inline constexpr std::string_view kMaskVelocityZeroValid = "velocity_zero_valid";

// Derived audit range for max_valid_hr_idx.
inline constexpr InputRange kMaskIdxRange = {kMaskMaxValidHrIdx, 0.0, 500.0};

int input_key_index(std::string_view key);  // -1 when not an input key

inline double ProcessState::field(int key_index) const {
  switch (key_index) {
    case 0: return current_thickness;
    case 1: return target_thickness;
    case 2: return hr_limit;
    case 3: return stock_temperature;
    case 4: return target_temperature;
    case 5: return current_grain_size;
    case 6: return target_grain_size;
    case 7: return rolling_force;
    case 8: return rolling_torque;
    case 9: return step_count;
  }
  return 0.0;
}

inline void ProcessState::set_field(int key_index, double v) {
  switch (key_index) {
    case 0: current_thickness = v; break;
    case 1: target_thickness = v; break;
    case 2: hr_limit = v; break;
    case 3: stock_temperature = v; break;
    case 4: target_temperature = v; break;
    case 5: current_grain_size = v; break;
    case 6: target_grain_size = v; break;
    case 7: rolling_force = v; break;
    case 8: rolling_torque = v; break;
    case 9: step_count = v; break;
  }
}

}  // namespace millkit
