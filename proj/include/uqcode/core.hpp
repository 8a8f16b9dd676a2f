#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqcode/errors.hpp"

namespace uqcode {

struct TopKEntry {
  std::string text;
  double prob = 0.0;
};

/// Top-K next-token alternatives at one position, sorted descending by prob.
struct TopKAlternatives {
  std::vector<TopKEntry> entries;
};

/// One completion token with its linear probability. Providers report natural
/// log-probabilities; the log value is kept verbatim so datasets re-serialize
/// byte-identically, and the linear prob is derived exactly once at ingest.
struct TokenRecord {
  std::string text;
  double prob = 1.0;
  double logprob = 0.0;
  std::optional<TopKAlternatives> top_k;

  static TokenRecord from_logprob(std::string text, double logprob,
                                  std::optional<TopKAlternatives> top_k = std::nullopt);
  static TokenRecord from_prob(std::string text, double prob,
                               std::optional<TopKAlternatives> top_k = std::nullopt);
};

enum class Role { original, sample };

struct Generation {
  std::string problem_id;
  Role role = Role::original;
  std::optional<int> sample_index;  // 1-based, samples only
  std::string raw_text;
  std::string code;  // extracted from raw_text
  std::vector<TokenRecord> tokens;  // may be empty for judge-only workflows
  std::string model_id;
  double temperature = 0.0;
  std::optional<std::string> outcome_key;  // execution outcome label, for purity validation
};

/// Original response plus m sampled responses for one prompt.
struct ResponseSet {
  std::string problem_id;
  Generation original;
  std::vector<Generation> samples;

  int sample_count() const { return static_cast<int>(samples.size()); }
};

struct ConfidenceScore {
  std::string scorer_name;
  double value = 0.0;
  bool normalized = true;
};

/// Checks all ResponseSet invariants and returns the set unchanged.
/// Probabilities are already linear in memory (conversion from provider logs
/// happens exactly once at parse time), so this never mutates.
const ResponseSet& validate_response_set(const ResponseSet& set, bool require_tokens);

struct ExtractedCode {
  std::string code;
  bool fenced = false;
  bool multiple_fences = false;  // extra blocks were ignored; first block wins
};

ExtractedCode extract_code_ex(const std::string& raw_text, const std::string& language_hint = "");

/// Contents of the first fenced block if any fence exists, else the trimmed
/// raw text. Total; never throws.
std::string extract_code(const std::string& raw_text, const std::string& language_hint = "");

}  // namespace uqcode
