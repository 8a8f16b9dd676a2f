#pragma once

#include <stdexcept>
#include <string>

namespace uqcode {

enum class ErrorCode {
  empty_generation,
  missing_tokens,
  probability_out_of_range,
  duplicate_sample_index,
  invalid_sample_index,
  invalid_response_set,
  missing_top_k,
  insufficient_alternatives,
  invalid_k,
  too_few_samples,
  invalid_m,
  empty_code,
  malformed_verdict,
  verdict_undecidable,
  judge_unavailable,
  malformed_self_eval,
  provider_unavailable,
  logprobs_unsupported,
  embedder_unavailable,
  zero_norm_vector,
  degenerate_weights,
  degenerate_labels,
  missing_outcome,
  no_multi_element_clusters,
  insufficient_samples,
  missing_label,
  parse_error,
  schema_version_mismatch,
  io_error,
  config_error,
};

const char* error_code_name(ErrorCode code);

class UqError : public std::runtime_error {
 public:
  UqError(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace uqcode
