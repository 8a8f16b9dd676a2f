#pragma once

#include <span>

#include "uqcode/core.hpp"

namespace uqcode {

/// Configuration for scorers that need top-K alternatives. The effective K at
/// scoring time is min(k, depth the provider returned), never below 2.
struct TokenScoreConfig {
  int k = 8;
  double epsilon = 1e-12;  // clamp floor applied before logs
};

ConfidenceScore sequence_probability(std::span<const TokenRecord> tokens);
ConfidenceScore lnsp(std::span<const TokenRecord> tokens);
ConfidenceScore min_token_prob(std::span<const TokenRecord> tokens);
ConfidenceScore prob_margin(std::span<const TokenRecord> tokens);

/// Negentropy of the renormalized top-k distribution at one position:
/// 1 - H/log(k), in [0,1], higher = more confident. Base-free by construction.
double token_negentropy_at_k(const TopKAlternatives& alts, int k);

ConfidenceScore avg_token_negentropy(std::span<const TokenRecord> tokens,
                                     const TokenScoreConfig& config);
ConfidenceScore min_token_negentropy(std::span<const TokenRecord> tokens,
                                     const TokenScoreConfig& config);

/// K actually used for a generation: config cap clamped to the shallowest
/// top-K depth the provider returned across positions. Throws
/// InsufficientAlternatives when any position has fewer than 2 alternatives.
int effective_top_k(std::span<const TokenRecord> tokens, const TokenScoreConfig& config);

/// Geometric mean of token probabilities, shared by the hybrid scorers.
double lnsp_value(std::span<const TokenRecord> tokens, double epsilon = 1e-12);

}  // namespace uqcode
