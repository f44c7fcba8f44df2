#pragma once

#include <stdexcept>
#include <string>

namespace ads2 {

/// Argument outside the function's domain, or an inadmissible family/mass pairing.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Series or quadrature failed to reach its tolerance.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested evaluation path does not apply to these parameters.
struct branch_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ads2
