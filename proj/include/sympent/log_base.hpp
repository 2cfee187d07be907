#pragma once

#include <string_view>

namespace sympent {

enum class LogBase { bits, nats };

/// "bits" or "nats"; throws ParameterError otherwise.
LogBase parse_log_base(std::string_view text);
std::string_view to_string(LogBase base);

/// Converts a value in nats to the requested base.
inline double from_nats(double nats, LogBase base) {
  constexpr double kLn2 = 0.69314718055994530942;
  return base == LogBase::bits ? nats / kLn2 : nats;
}

}  // namespace sympent
