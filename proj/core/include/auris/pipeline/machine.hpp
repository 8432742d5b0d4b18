#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "auris/common/direction.hpp"
#include "auris/fusion/select.hpp"
#include "auris/sim/clip.hpp"

namespace auris::pipeline {

enum class CycleState { kIdle, kGated, kAwaitTurn, kAwaitImage, kDone };

std::string cycle_state_name(CycleState s);

struct Event {
  enum class Type { kAudioWindow, kImage, kReset };
  Type type = Type::kReset;
  double t = 0.0;  // logical event time, seconds
  sim::MultiChannelClip clip;
  std::string image_path;

  static Event audio(double t, sim::MultiChannelClip clip);
  static Event image(double t, std::string path);
  static Event reset(double t);
};

struct DisplayMessage {
  enum class Kind { kDirectionAlert, kBoxResult };
  Kind kind = Kind::kDirectionAlert;
  std::string text;
  std::uint64_t cycle_id = 0;
  double t = 0.0;
};

/// "There is a 'object' in the 'direction'" with the quotes filled in.
std::string direction_alert_text(const std::string& object, DirectionClass direction);

struct MachineConfig {
  double gate_db = 60.0;
  double calibration_offset_db = 94.0;
  /// Returns to Idle when no image arrives within this much simulated time
  /// after the camera request; <= 0 disables the timeout.
  double image_timeout_s = 10.0;
};

struct StepResult {
  std::vector<DisplayMessage> messages;
  std::vector<std::string> transitions;  // "Idle->Gated" style, for the replay log
  bool camera_requested = false;
  bool event_dropped = false;
  std::optional<std::string> diagnostic;
};

/// The device cycle as an event-driven machine. One consumer applies events
/// in order; a cycle in flight ignores further audio windows, so cycles never
/// overlap.
class CycleMachine {
 public:
  using DoaFn = std::function<DirectionClass(const sim::MultiChannelClip&)>;
  using ScoreFn = std::function<std::optional<std::string>(const sim::MultiChannelClip&)>;
  using FuseFn = std::function<fusion::SelectionResult(const std::string& image_path)>;

  CycleMachine(MachineConfig cfg, DoaFn doa, ScoreFn score, FuseFn fuse);

  StepResult step(const Event& event);

  CycleState state() const { return state_; }
  std::uint64_t cycle_id() const { return cycle_id_; }

 private:
  void transition(StepResult& out, CycleState to);

  MachineConfig cfg_;
  DoaFn doa_;
  ScoreFn score_;
  FuseFn fuse_;
  CycleState state_ = CycleState::kIdle;
  std::uint64_t cycle_id_ = 0;  // id of the most recently started cycle
  double await_since_ = 0.0;
  DirectionClass pending_direction_ = DirectionClass::kFront;
  std::string pending_class_;
};

}  // namespace auris::pipeline
