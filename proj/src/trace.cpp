#include "mobisim/trace.hpp"

#include <cstdio>

namespace mobisim {

std::string trace_csv_row(double time_s, const MessageEvent& e) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.6f,%s,%d,%d,%d,%d,%s", time_s, to_string(e.kind),
                e.from, e.to, e.hops, e.bytes, to_string(e.plane));
  return buf;
}

}  // namespace mobisim
