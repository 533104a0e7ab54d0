#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latrep {

// Base class of every error thrown by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input and construction errors.
class parse_error : public error {
 public:
  using error::error;
};
class invalid_name : public error {
 public:
  using error::error;
};
class duplicate_name : public error {
 public:
  using error::error;
};
class unknown_element : public error {
 public:
  using error::error;
};
class cycle_detected : public error {
 public:
  using error::error;
};
class cap_exceeded : public error {
 public:
  using error::error;
};
class not_a_lattice : public error {
 public:
  using error::error;
};
class not_an_upset : public error {
 public:
  using error::error;
};
class not_monotone : public error {
 public:
  using error::error;
};
class not_intersection_closed : public error {
 public:
  using error::error;
};
class missing_full_set : public error {
 public:
  using error::error;
};
class carrier_mismatch : public error {
 public:
  using error::error;
};
class precondition_failed : public error {
 public:
  using error::error;
};

// Certificate errors. These are thrown only when a statement the library
// re-verifies at runtime fails to hold; any occurrence means a bug (or a
// refuted statement), and the CLI maps them to exit code 5. A process-wide
// counter lets the acceptance suite assert that none ever fired.
class certificate_error : public error {
 public:
  explicit certificate_error(const std::string& what) : error(what) { counter().fetch_add(1); }
  static std::uint64_t fired_count() { return counter().load(); }

 private:
  static std::atomic<std::uint64_t>& counter() {
    static std::atomic<std::uint64_t> count{0};
    return count;
  }
};

// Two independently computed routes to the same verdict disagreed.
class internal_disagreement : public certificate_error {
 public:
  using certificate_error::certificate_error;
};
// A constructed witness failed its defining property.
class verification_failed : public certificate_error {
 public:
  using certificate_error::certificate_error;
};
// A postcondition established by the underlying theory failed on valid input.
class cut_mismatch : public certificate_error {
 public:
  using certificate_error::certificate_error;
};

}  // namespace latrep
