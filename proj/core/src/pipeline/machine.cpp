#include "auris/pipeline/machine.hpp"

#include "auris/pipeline/gate.hpp"

namespace auris::pipeline {

std::string cycle_state_name(CycleState s) {
  switch (s) {
    case CycleState::kIdle: return "Idle";
    case CycleState::kGated: return "Gated";
    case CycleState::kAwaitTurn: return "AwaitTurn";
    case CycleState::kAwaitImage: return "AwaitImage";
    case CycleState::kDone: return "Done";
  }
  return "?";
}

Event Event::audio(double t, sim::MultiChannelClip clip) {
  Event e;
  e.type = Type::kAudioWindow;
  e.t = t;
  e.clip = std::move(clip);
  return e;
}

Event Event::image(double t, std::string path) {
  Event e;
  e.type = Type::kImage;
  e.t = t;
  e.image_path = std::move(path);
  return e;
}

Event Event::reset(double t) {
  Event e;
  e.type = Type::kReset;
  e.t = t;
  return e;
}

std::string direction_alert_text(const std::string& object, DirectionClass direction) {
  return "There is a " + object + " in the " + direction_name(direction);
}

CycleMachine::CycleMachine(MachineConfig cfg, DoaFn doa, ScoreFn score, FuseFn fuse)
    : cfg_(cfg), doa_(std::move(doa)), score_(std::move(score)), fuse_(std::move(fuse)) {}

void CycleMachine::transition(StepResult& out, CycleState to) {
  out.transitions.push_back(cycle_state_name(state_) + "->" + cycle_state_name(to));
  state_ = to;
}

StepResult CycleMachine::step(const Event& event) {
  StepResult out;

  if (state_ == CycleState::kAwaitImage && cfg_.image_timeout_s > 0.0 &&
      event.t - await_since_ > cfg_.image_timeout_s) {
    out.diagnostic = "image timeout; cycle " + std::to_string(cycle_id_) + " abandoned";
    transition(out, CycleState::kIdle);
  }

  switch (event.type) {
    case Event::Type::kReset: {
      if (state_ != CycleState::kIdle) transition(out, CycleState::kIdle);
      return out;
    }

    case Event::Type::kAudioWindow: {
      if (state_ != CycleState::kIdle) {
        // a cycle is still running; new windows are dropped
        out.event_dropped = true;
        return out;
      }
      const double level = rms_db(event.clip, cfg_.calibration_offset_db);
      if (!(level >= cfg_.gate_db)) {
        return out;  // below the gate: stay Idle, no messages
      }
      ++cycle_id_;
      transition(out, CycleState::kGated);

      const DirectionClass direction = doa_(event.clip);
      const std::optional<std::string> object = score_(event.clip);
      if (!object) {
        transition(out, CycleState::kIdle);
        return out;
      }
      pending_direction_ = direction;
      pending_class_ = *object;
      transition(out, CycleState::kAwaitTurn);
      out.messages.push_back({DisplayMessage::Kind::kDirectionAlert,
                              direction_alert_text(pending_class_, pending_direction_), cycle_id_, event.t});
      // the wearer turning toward the sound is what triggers the camera
      transition(out, CycleState::kAwaitImage);
      out.camera_requested = true;
      await_since_ = event.t;
      return out;
    }

    case Event::Type::kImage: {
      if (state_ != CycleState::kAwaitImage) {
        out.event_dropped = true;
        return out;
      }
      try {
        const fusion::SelectionResult sel = fuse_(event.image_path);
        transition(out, CycleState::kDone);
        const auto& b = sel.chosen.box;
        out.messages.push_back({DisplayMessage::Kind::kBoxResult,
                                "box x=" + std::to_string(b.x) + " y=" + std::to_string(b.y) +
                                    " w=" + std::to_string(b.w) + " h=" + std::to_string(b.h) +
                                    " class=" + sel.chosen.class_name,
                                cycle_id_, event.t});
        transition(out, CycleState::kIdle);
      } catch (const DomainError& e) {
        out.diagnostic = std::string("fusion failed: ") + e.what();
        transition(out, CycleState::kIdle);
      }
      return out;
    }
  }
  return out;
}

}  // namespace auris::pipeline
