#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace millkit {

// Discrete action dimensions. Index 0 exists in every dimension but is
// permanently masked out for interpass and velocity; see ActionMask.
inline constexpr int kHrLevels = 501;        // 0..500 <-> 0.0..50.0 mm drafts
inline constexpr int kInterpassLevels = 121; // 0..120 <-> seconds of waiting
inline constexpr int kVelocityLevels = 7;    // 0..6 discrete speed levels

inline constexpr int kMaxHrIdx = kHrLevels - 1;
inline constexpr int kMaxInterpassIdx = kInterpassLevels - 1;
inline constexpr int kMaxVelocityIdx = kVelocityLevels - 1;

// Sentinel recorded for force/torque before the first pass of an episode.
inline constexpr double kPreFirstPassSentinel = -100.0;

// The ten observable inputs a controller receives each pass.
struct ProcessState {
  double current_thickness = 0.0;  // mm
  double target_thickness = 0.0;   // mm
  double hr_limit = 0.0;           // mm, per-pass equipment cap
  double stock_temperature = 0.0;  // K
  double target_temperature = 0.0; // K
  double current_grain_size = 0.0; // um
  double target_grain_size = 0.0;  // um
  double rolling_force = 0.0;      // N
  double rolling_torque = 0.0;     // N*m
  double step_count = 0.0;         // passes completed so far

  double field(int key_index) const;
  void set_field(int key_index, double v);
};

// Validity structure over the action space. The height-reduction mask is
// contiguous (all indices up to max_valid_hr_idx are valid), so it is carried
// as a single scalar boundary. Interpass and velocity simply exclude level 0.
struct ActionMask {
  int max_valid_hr_idx = 0;
  int interpass_valid_from = 1;
  int velocity_valid_from = 1;

  bool hr_valid(int idx) const { return idx >= 0 && idx <= max_valid_hr_idx; }
  bool interpass_valid(int idx) const {
    return idx >= interpass_valid_from && idx <= kMaxInterpassIdx;
  }
  bool velocity_valid(int idx) const {
    return idx >= velocity_valid_from && idx <= kMaxVelocityIdx;
  }
};

// One controller decision: (height reduction, interpass time, velocity).
struct ActionTriple {
  int hr_idx = 0;
  int interpass_idx = 0;
  int velocity_idx = 0;

  bool operator==(const ActionTriple&) const = default;
};

}  // namespace millkit
