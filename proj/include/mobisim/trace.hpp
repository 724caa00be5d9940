#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mobisim/messages.hpp"
#include "mobisim/topology.hpp"

namespace mobisim {

enum class Plane { CONTROL, DATA };

inline const char* to_string(Plane p) { return p == Plane::CONTROL ? "control" : "data"; }

// One costed protocol message: cost is hops * bytes.
struct MessageEvent {
  MessageKind kind{};
  NodeId from = 0;
  NodeId to = 0;
  int hops = 0;
  int bytes = 0;
  Plane plane = Plane::CONTROL;

  std::int64_t cost() const { return static_cast<std::int64_t>(hops) * bytes; }
};

// Ordered message events emitted by one protocol operation.
struct HandoverTrace {
  std::vector<MessageEvent> events;

  std::int64_t control_cost() const {
    std::int64_t sum = 0;
    for (const auto& e : events)
      if (e.plane == Plane::CONTROL) sum += e.cost();
    return sum;
  }
  std::int64_t data_cost() const {
    std::int64_t sum = 0;
    for (const auto& e : events)
      if (e.plane == Plane::DATA) sum += e.cost();
    return sum;
  }
};

inline std::int64_t total_cost(const std::vector<MessageEvent>& events) {
  return std::accumulate(events.begin(), events.end(), std::int64_t{0},
                         [](std::int64_t acc, const MessageEvent& e) { return acc + e.cost(); });
}

inline std::string trace_csv_header() { return "time,kind,from,to,hops,bytes,plane"; }

std::string trace_csv_row(double time_s, const MessageEvent& e);

}  // namespace mobisim
