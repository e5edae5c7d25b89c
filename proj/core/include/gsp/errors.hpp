#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

/// Failure categories surfaced by the library. `data` failures come from
/// malformed or inconsistent inputs; `numerical` failures from conditions the
/// math requires (singular systems, violated sampling conditions, solver
/// breakdowns).
enum class Errc {
  // input / data
  negative_weight,
  self_loop,
  conflicting_duplicate_edge,
  duplicate_station_id,
  invalid_coordinate,
  isolated_vertex_in_normalized,
  not_symmetric,
  dimension_mismatch,
  index_out_of_range,
  size_out_of_range,
  empty_complement,
  set_mismatch,
  invalid_tolerance,
  parse_error,
  // numerical
  eigensolver_failure,
  rank_norm_disagreement,
  condition_violated,
  singular_system,
  no_valid_trials,
};

constexpr bool is_numerical(Errc c) {
  switch (c) {
    case Errc::eigensolver_failure:
    case Errc::rank_norm_disagreement:
    case Errc::condition_violated:
    case Errc::singular_system:
    case Errc::no_valid_trials:
      return true;
    default:
      return false;
  }
}

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gsp
