#ifndef QRD_ERRORS_HPP
#define QRD_ERRORS_HPP

#include <stdexcept>

namespace qrd {

/// Thrown when a computation would exceed one of the documented resource
/// guards (table sizes, subset counts, field orders). Mapped to a distinct
/// process exit code by the CLI.
class guard_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qrd

#endif
