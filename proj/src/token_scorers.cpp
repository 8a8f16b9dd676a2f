#include "uqcode/token_scorers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uqcode {

namespace {

double clamp_prob(double p, double epsilon) {
  return std::min(1.0, std::max(epsilon, p));
}

void require_nonempty(std::span<const TokenRecord> tokens, const char* scorer) {
  if (tokens.empty()) {
    raise(ErrorCode::empty_generation, std::string(scorer) + " needs at least one token");
  }
}

}  // namespace

double lnsp_value(std::span<const TokenRecord> tokens, double epsilon) {
  double log_sum = 0.0;
  for (const auto& token : tokens) log_sum += std::log(clamp_prob(token.prob, epsilon));
  return std::exp(log_sum / static_cast<double>(tokens.size()));
}

ConfidenceScore sequence_probability(std::span<const TokenRecord> tokens) {
  require_nonempty(tokens, "sequence_probability");
  double product = 1.0;
  for (const auto& token : tokens) product *= clamp_prob(token.prob, 0.0);
  return {"sequence_probability", product, true};
}

ConfidenceScore lnsp(std::span<const TokenRecord> tokens) {
  require_nonempty(tokens, "lnsp");
  return {"lnsp", lnsp_value(tokens), true};
}

ConfidenceScore min_token_prob(std::span<const TokenRecord> tokens) {
  require_nonempty(tokens, "min_token_prob");
  double min_prob = 1.0;
  for (const auto& token : tokens) min_prob = std::min(min_prob, clamp_prob(token.prob, 0.0));
  return {"min_token_prob", min_prob, true};
}

ConfidenceScore prob_margin(std::span<const TokenRecord> tokens) {
  require_nonempty(tokens, "prob_margin");
  double sum = 0.0;
  for (const auto& token : tokens) {
    if (!token.top_k || token.top_k->entries.size() < 2) {
      raise(ErrorCode::missing_top_k, "prob_margin needs top-2 alternatives at every position");
    }
    sum += token.top_k->entries[0].prob - token.top_k->entries[1].prob;
  }
  return {"prob_margin", sum / static_cast<double>(tokens.size()), true};
}

double token_negentropy_at_k(const TopKAlternatives& alts, int k) {
  if (k < 2) raise(ErrorCode::invalid_k, "top-k depth must be at least 2");
  if (static_cast<int>(alts.entries.size()) < k) {
    raise(ErrorCode::insufficient_alternatives,
          "need " + std::to_string(k) + " alternatives, have " +
              std::to_string(alts.entries.size()));
  }
  double total = 0.0;
  for (int i = 0; i < k; ++i) total += std::max(0.0, alts.entries[i].prob);
  // A degenerate all-zero head renormalizes to uniform: maximal entropy.
  if (total <= 0.0) return 0.0;
  double entropy = 0.0;
  for (int i = 0; i < k; ++i) {
    double q = std::max(0.0, alts.entries[i].prob) / total;
    if (q > 0.0) entropy -= q * std::log(q);
  }
  return 1.0 - entropy / std::log(static_cast<double>(k));
}

int effective_top_k(std::span<const TokenRecord> tokens, const TokenScoreConfig& config) {
  if (config.k < 2) raise(ErrorCode::invalid_k, "configured top-k depth must be at least 2");
  require_nonempty(tokens, "effective_top_k");
  int depth = config.k;
  size_t position = 0;
  for (const auto& token : tokens) {
    int available = token.top_k ? static_cast<int>(token.top_k->entries.size()) : 0;
    if (available < 2) {
      raise(ErrorCode::insufficient_alternatives,
            "position " + std::to_string(position) + " has " + std::to_string(available) +
                " alternatives");
    }
    depth = std::min(depth, available);
    ++position;
  }
  return depth;
}

ConfidenceScore avg_token_negentropy(std::span<const TokenRecord> tokens,
                                     const TokenScoreConfig& config) {
  const int k = effective_top_k(tokens, config);
  double sum = 0.0;
  for (const auto& token : tokens) sum += token_negentropy_at_k(*token.top_k, k);
  return {"avg_token_negentropy", sum / static_cast<double>(tokens.size()), true};
}

ConfidenceScore min_token_negentropy(std::span<const TokenRecord> tokens,
                                     const TokenScoreConfig& config) {
  const int k = effective_top_k(tokens, config);
  double min_value = std::numeric_limits<double>::infinity();
  for (const auto& token : tokens) {
    min_value = std::min(min_value, token_negentropy_at_k(*token.top_k, k));
  }
  return {"min_token_negentropy", min_value, true};
}

}  // namespace uqcode
