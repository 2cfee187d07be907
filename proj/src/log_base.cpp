#include "sympent/log_base.hpp"

#include <string>

#include "sympent/errors.hpp"

namespace sympent {

LogBase parse_log_base(std::string_view text) {
  if (text == "bits") return LogBase::bits;
  if (text == "nats") return LogBase::nats;
  throw ParameterError("log base must be 'bits' or 'nats', got '" + std::string(text) + "'");
}

std::string_view to_string(LogBase base) { return base == LogBase::bits ? "bits" : "nats"; }

}  // namespace sympent
