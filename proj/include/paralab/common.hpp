#pragma once

#include <stdexcept>
#include <string>

namespace paralab {

// Error taxonomy. Everything user-facing throws one of these (or std::domain_error
// for plain argument-domain violations) with a short diagnostic.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct index_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct accuracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct calibration_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resolution_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct dependency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct bounds_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct fit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace paralab
