#include "uqcode/errors.hpp"

namespace uqcode {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_generation: return "EmptyGeneration";
    case ErrorCode::missing_tokens: return "MissingTokens";
    case ErrorCode::probability_out_of_range: return "ProbabilityOutOfRange";
    case ErrorCode::duplicate_sample_index: return "DuplicateSampleIndex";
    case ErrorCode::invalid_sample_index: return "InvalidSampleIndex";
    case ErrorCode::invalid_response_set: return "InvalidResponseSet";
    case ErrorCode::missing_top_k: return "MissingTopK";
    case ErrorCode::insufficient_alternatives: return "InsufficientAlternatives";
    case ErrorCode::invalid_k: return "InvalidK";
    case ErrorCode::too_few_samples: return "TooFewSamples";
    case ErrorCode::invalid_m: return "InvalidM";
    case ErrorCode::empty_code: return "EmptyCode";
    case ErrorCode::malformed_verdict: return "MalformedVerdict";
    case ErrorCode::verdict_undecidable: return "VerdictUndecidable";
    case ErrorCode::judge_unavailable: return "JudgeUnavailable";
    case ErrorCode::malformed_self_eval: return "MalformedSelfEval";
    case ErrorCode::provider_unavailable: return "ProviderUnavailable";
    case ErrorCode::logprobs_unsupported: return "LogprobsUnsupported";
    case ErrorCode::embedder_unavailable: return "EmbedderUnavailable";
    case ErrorCode::zero_norm_vector: return "ZeroNormVector";
    case ErrorCode::degenerate_weights: return "DegenerateWeights";
    case ErrorCode::degenerate_labels: return "DegenerateLabels";
    case ErrorCode::missing_outcome: return "MissingOutcome";
    case ErrorCode::no_multi_element_clusters: return "NoMultiElementClusters";
    case ErrorCode::insufficient_samples: return "InsufficientSamples";
    case ErrorCode::missing_label: return "MissingLabel";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::schema_version_mismatch: return "SchemaVersionMismatch";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::config_error: return "ConfigError";
  }
  return "UnknownError";
}

UqError::UqError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw UqError(code, message); }

}  // namespace uqcode
