#ifndef PREFSPACE_ERRORS_HPP
#define PREFSPACE_ERRORS_HPP

#include <stdexcept>

namespace prefspace {

// Numerical failure of an analysis (zero mass, undefined rho). The CLI maps
// this to exit code 3; configuration problems map to exit code 2.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace prefspace

#endif
