#include "tmsv/format.hpp"

#include <cstdio>

namespace tmsv {

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace tmsv
