#pragma once

#include <stdexcept>
#include <string>

namespace btw {

enum class ErrorCode {
  unknown_label,
  duplicate_label,
  carrier_mismatch,
  invalid_partition,
  invalid_map,
  not_r_relation,
  invalid_road_system,
  invalid_poset,
  invalid_lattice,
  order_recovery,
  invalid_witness,
  carrier_too_large,
  amalgamation,
  invalid_input,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Domain error raised by library operations. The code identifies the
/// contract that was violated; what() carries the offending detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace btw
