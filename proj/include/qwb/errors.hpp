#ifndef QWB_ERRORS_HPP
#define QWB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwb {

/// Malformed input: unparsable files, wrong arity, bad literals.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold for otherwise well-formed data.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qwb

#endif
