#include "uqcode/core.hpp"

#include <cctype>
#include <cmath>
#include <set>

namespace uqcode {

namespace {

constexpr double kTopKSumSlack = 1e-6;
constexpr double kProbUpperSlack = 1e-6;

std::string trim(const std::string& s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

void check_prob(double prob, const std::string& where) {
  if (!std::isfinite(prob) || prob <= 0.0 || prob > 1.0 + kProbUpperSlack) {
    raise(ErrorCode::probability_out_of_range,
          where + " has probability " + std::to_string(prob) + ", expected (0,1]");
  }
}

void check_top_k(const TopKAlternatives& alts, const std::string& where) {
  if (alts.entries.size() < 2) {
    raise(ErrorCode::probability_out_of_range, where + " top-k has fewer than 2 entries");
  }
  double sum = 0.0;
  double prev = 2.0;
  for (const auto& entry : alts.entries) {
    if (!std::isfinite(entry.prob) || entry.prob < 0.0 || entry.prob > 1.0 + kProbUpperSlack) {
      raise(ErrorCode::probability_out_of_range,
            where + " top-k entry probability " + std::to_string(entry.prob));
    }
    if (entry.prob > prev + 1e-12) {
      raise(ErrorCode::probability_out_of_range, where + " top-k entries not sorted descending");
    }
    prev = entry.prob;
    sum += entry.prob;
  }
  if (sum > 1.0 + kTopKSumSlack) {
    raise(ErrorCode::probability_out_of_range,
          where + " top-k probabilities sum to " + std::to_string(sum) + " > 1");
  }
}

void check_generation(const Generation& gen, const std::string& where) {
  if (gen.code.empty() && trim(gen.raw_text).empty()) {
    raise(ErrorCode::empty_generation, where + " has empty code and empty raw text");
  }
  size_t position = 0;
  for (const auto& token : gen.tokens) {
    const std::string token_where = where + " token " + std::to_string(position);
    check_prob(token.prob, token_where);
    if (token.top_k) check_top_k(*token.top_k, token_where);
    ++position;
  }
}

}  // namespace

TokenRecord TokenRecord::from_logprob(std::string text, double logprob,
                                      std::optional<TopKAlternatives> top_k) {
  TokenRecord record;
  record.text = std::move(text);
  record.logprob = logprob;
  record.prob = std::exp(logprob);
  record.top_k = std::move(top_k);
  return record;
}

TokenRecord TokenRecord::from_prob(std::string text, double prob,
                                   std::optional<TopKAlternatives> top_k) {
  TokenRecord record;
  record.text = std::move(text);
  record.prob = prob;
  record.logprob = prob > 0.0 ? std::log(prob) : -HUGE_VAL;
  record.top_k = std::move(top_k);
  return record;
}

const ResponseSet& validate_response_set(const ResponseSet& set, bool require_tokens) {
  if (set.original.role != Role::original) {
    raise(ErrorCode::invalid_response_set, "original member has sample role");
  }
  if (set.original.sample_index.has_value()) {
    raise(ErrorCode::invalid_response_set, "original member carries a sample index");
  }
  if (!set.original.problem_id.empty() && set.original.problem_id != set.problem_id) {
    raise(ErrorCode::invalid_response_set,
          "original problem id " + set.original.problem_id + " != " + set.problem_id);
  }
  check_generation(set.original, "original");
  if (require_tokens && set.original.tokens.empty()) {
    raise(ErrorCode::missing_tokens, "original has no token probabilities");
  }

  std::set<int> seen_indices;
  int position = 1;
  for (const auto& sample : set.samples) {
    const std::string where = "sample " + std::to_string(position);
    if (sample.role != Role::sample) {
      raise(ErrorCode::invalid_response_set, where + " does not have sample role");
    }
    if (!sample.problem_id.empty() && sample.problem_id != set.problem_id) {
      raise(ErrorCode::invalid_response_set, where + " problem id mismatch");
    }
    if (!sample.sample_index.has_value()) {
      raise(ErrorCode::invalid_sample_index, where + " is missing its sample index");
    }
    if (!seen_indices.insert(*sample.sample_index).second) {
      raise(ErrorCode::duplicate_sample_index,
            "sample index " + std::to_string(*sample.sample_index) + " appears twice");
    }
    if (*sample.sample_index != position) {
      raise(ErrorCode::invalid_sample_index,
            where + " has index " + std::to_string(*sample.sample_index) + ", expected " +
                std::to_string(position));
    }
    check_generation(sample, where);
    ++position;
  }
  return set;
}

ExtractedCode extract_code_ex(const std::string& raw_text, const std::string& /*language_hint*/) {
  ExtractedCode result;
  const std::string fence = "```";
  size_t open = raw_text.find(fence);
  if (open == std::string::npos) {
    result.code = trim(raw_text);
    return result;
  }
  result.fenced = true;
  // Content starts after the opening-fence line (optional language tag).
  size_t content_begin = raw_text.find('\n', open + fence.size());
  if (content_begin == std::string::npos) {
    result.code.clear();
    return result;
  }
  ++content_begin;
  size_t close = raw_text.find(fence, content_begin);
  size_t content_end = close == std::string::npos ? raw_text.size() : close;
  result.code = trim(raw_text.substr(content_begin, content_end - content_begin));
  if (close != std::string::npos &&
      raw_text.find(fence, close + fence.size()) != std::string::npos) {
    result.multiple_fences = true;
  }
  return result;
}

std::string extract_code(const std::string& raw_text, const std::string& language_hint) {
  return extract_code_ex(raw_text, language_hint).code;
}

}  // namespace uqcode
