#pragma once

// Error reporting for the whole toolkit.  Every failure throws revsynth::error
// carrying a machine-readable code; the CLI maps codes onto exit statuses, so
// code() must stay stable even if the human-readable text changes.

#include <stdexcept>
#include <string>

namespace revsynth {

enum class errc {
  degree_mismatch,
  malformed_cycle,
  point_out_of_range,
  repeated_point,
  rank_out_of_range,
  degree_too_large_for_ranking,
  invalid_gate,
  malformed_label,
  unsupported_width,
  cap_exceeded,
  library_too_large,
  not_in_generated_group,
  depth_exceeded,
  bad_input,
};

constexpr const char* code_name(errc c) {
  switch (c) {
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::malformed_cycle: return "MalformedCycle";
    case errc::point_out_of_range: return "PointOutOfRange";
    case errc::repeated_point: return "RepeatedPoint";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::degree_too_large_for_ranking: return "DegreeTooLargeForRanking";
    case errc::invalid_gate: return "InvalidGate";
    case errc::malformed_label: return "MalformedLabel";
    case errc::unsupported_width: return "UnsupportedWidth";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::library_too_large: return "LibraryTooLarge";
    case errc::not_in_generated_group: return "NotInGeneratedGroup";
    case errc::depth_exceeded: return "DepthExceeded";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace revsynth
