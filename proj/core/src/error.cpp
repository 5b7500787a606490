#include "betweenness/error.hpp"

namespace btw {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::unknown_label: return "unknown_label";
    case ErrorCode::duplicate_label: return "duplicate_label";
    case ErrorCode::carrier_mismatch: return "carrier_mismatch";
    case ErrorCode::invalid_partition: return "invalid_partition";
    case ErrorCode::invalid_map: return "invalid_map";
    case ErrorCode::not_r_relation: return "not_r_relation";
    case ErrorCode::invalid_road_system: return "invalid_road_system";
    case ErrorCode::invalid_poset: return "invalid_poset";
    case ErrorCode::invalid_lattice: return "invalid_lattice";
    case ErrorCode::order_recovery: return "order_recovery";
    case ErrorCode::invalid_witness: return "invalid_witness";
    case ErrorCode::carrier_too_large: return "carrier_too_large";
    case ErrorCode::amalgamation: return "amalgamation";
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace btw
