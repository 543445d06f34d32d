#pragma once

#include <stdexcept>
#include <string>

namespace laman {

/// Bad arguments: unknown ids, violated preconditions, malformed graphs.
class invalid_input_error : public std::invalid_argument {
 public:
  explicit invalid_input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Geometric input too degenerate to work with (e.g. no usable pivot pair).
class degenerate_input_error : public invalid_input_error {
 public:
  explicit degenerate_input_error(const std::string& what) : invalid_input_error(what) {}
};

/// Malformed text input. `offset` is a byte offset for graph6 lines and a
/// 1-based line number for edge-list files.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A computation failed: counter overflow, non-integer bound, engine limits.
class computation_error : public std::runtime_error {
 public:
  explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit realization counter would wrap.
class overflow_error : public computation_error {
 public:
  explicit overflow_error(const std::string& what) : computation_error(what) {}
};

/// Cooperative deadline hit inside a long-running computation.
class timeout_error : public computation_error {
 public:
  explicit timeout_error(const std::string& what) : computation_error(what) {}
};

}  // namespace laman
