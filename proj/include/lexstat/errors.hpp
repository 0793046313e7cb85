#pragma once

#include <stdexcept>
#include <string>

namespace lexstat {

enum class ErrorCode {
  parse_error,
  invalid_profile,
  profile_mismatch,
  empty_stream,
  view_mismatch,
  stream_too_short,
  too_few_inputs,
  invalid_threshold,
  too_few_occurrences,
  series_too_short,
  zero_variance,
  empty_counts,
  invalid_region,
  eigenvalue_on_circle,
  no_convergence,
  empty_references,
  window_too_large,
  non_positive_weight,
  invalid_offset,
  no_admissible_offset,
  degenerate_variance,
  out_of_range,
  no_root,
  io_error,
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

// Library-wide exception. Messages read "CodeName: detail".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace lexstat
