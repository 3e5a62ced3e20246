#pragma once

#include <stdexcept>
#include <string>

namespace monutil {

/// Base of every error raised by the library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid scalar or count argument (non-positive scale, too few points, ...).
class parameter_error : public error {
  public:
    using error::error;
};

/// Malformed structure, e.g. a non-square distance matrix.
class structural_error : public error {
  public:
    using error::error;
};

/// Two objects refer to different spaces.
class space_mismatch : public error {
  public:
    using error::error;
};

/// Exact vertex enumeration requested beyond the supported point count.
class capacity_error : public error {
  public:
    using error::error;
};

/// A utility whose representing set or penalty domain is empty.
class undefined_utility : public error {
  public:
    using error::error;
};

/// A pointwise limit did not settle within the declared horizon.
class stationarity_error : public error {
  public:
    using error::error;
};

/// u(f_m) increased along a decreasing sequence.
class monotonicity_violation : public error {
  public:
    using error::error;
};

/// Boundary evaluation along an approach sequence that does not settle.
class extension_error : public error {
  public:
    using error::error;
};

} // namespace monutil
