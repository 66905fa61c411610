#pragma once

#include <stdexcept>
#include <string>

namespace brunnian {

// Bad user input: unknown ids, out-of-range parameters, malformed files.
struct argument_error : std::runtime_error {
  explicit argument_error(const std::string& m) : std::runtime_error(m) {}
};

// A structural precondition failed (invalid diagram fed to an operation
// that requires a valid one, certificate/diagram mismatch, ...).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& m) : std::runtime_error(m) {}
};

// A rewrite (Reidemeister move, tangle composition) does not apply at the
// requested site.
struct rewrite_error : std::runtime_error {
  explicit rewrite_error(const std::string& m) : std::runtime_error(m) {}
};

// A configured resource cap was exceeded; the message names the cap.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace brunnian
