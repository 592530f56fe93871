#pragma once

#include <stdexcept>
#include <string>

namespace hdqva {

struct ZeroConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

// No dominant term exists for a negative-power factor under the given region.
struct NonExpandableFactor : std::domain_error {
  using std::domain_error::domain_error;
};

// A requested coefficient depends on data outside an input's window.
struct WindowUnderflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutsideWindow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct TooFewVariables : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedCharge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotClosedForm : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hdqva
