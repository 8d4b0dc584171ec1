#ifndef DOMCOMB_ERRORS_HPP_
#define DOMCOMB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace domcomb {

// Input data could not be read or parsed (bad file, malformed line).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource limit was exceeded (enumeration budget, search cap).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// The requested operation is not supported for the given inputs
// (unsupported family, method restriction not met).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace domcomb

#endif  // DOMCOMB_ERRORS_HPP_
