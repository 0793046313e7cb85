#include "lexstat/errors.hpp"

namespace lexstat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_profile: return "InvalidProfile";
    case ErrorCode::profile_mismatch: return "ProfileMismatch";
    case ErrorCode::empty_stream: return "EmptyStream";
    case ErrorCode::view_mismatch: return "ViewMismatch";
    case ErrorCode::stream_too_short: return "StreamTooShort";
    case ErrorCode::too_few_inputs: return "TooFewInputs";
    case ErrorCode::invalid_threshold: return "InvalidThreshold";
    case ErrorCode::too_few_occurrences: return "TooFewOccurrences";
    case ErrorCode::series_too_short: return "SeriesTooShort";
    case ErrorCode::zero_variance: return "ZeroVariance";
    case ErrorCode::empty_counts: return "EmptyCounts";
    case ErrorCode::invalid_region: return "InvalidRegion";
    case ErrorCode::eigenvalue_on_circle: return "EigenvalueOnCircle";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::empty_references: return "EmptyReferences";
    case ErrorCode::window_too_large: return "WindowTooLarge";
    case ErrorCode::non_positive_weight: return "NonPositiveWeight";
    case ErrorCode::invalid_offset: return "InvalidOffset";
    case ErrorCode::no_admissible_offset: return "NoAdmissibleOffset";
    case ErrorCode::degenerate_variance: return "DegenerateVariance";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::no_root: return "NoRoot";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace lexstat
