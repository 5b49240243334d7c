#pragma once

#include <string>

namespace tmsv {

/// Shortest-round-trip-safe decimal for a double: 17 significant digits.
std::string format_real(double value);

}  // namespace tmsv
