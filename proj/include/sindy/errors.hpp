#pragma once

#include <stdexcept>
#include <string>

namespace sindy {

// Input data violates a structural requirement (ordering, lengths, finiteness).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A file or stream could not be parsed; message names the offending line.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smoother / fit configuration is inconsistent with the data it is applied to.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A lookup fell outside a calibrated or covered range.
struct range_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested target (fall distance, bisection bracket) was never reached.
struct not_reached_error : std::runtime_error {
  not_reached_error(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_value(achieved) {}
  double achieved_value;
};

}  // namespace sindy
