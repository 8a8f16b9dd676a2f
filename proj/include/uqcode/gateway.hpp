#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "uqcode/core.hpp"

namespace uqcode {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

struct TokenTopAlt {
  std::string text;
  double logprob = 0.0;
};

struct TokenInfo {
  std::string text;
  double logprob = 0.0;
  std::vector<TokenTopAlt> top;
};

struct Usage {
  long input_tokens = 0;
  long output_tokens = 0;
};

struct ChatRequest {
  std::string model;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  bool want_logprobs = false;
  int top_logprobs = 0;
  std::optional<int> max_tokens;
};

struct ChatResponse {
  std::string text;
  std::vector<TokenInfo> tokens;  // empty when logprobs were not returned
  Usage usage;
  std::string model;
};

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<double> embed(const std::string& text) = 0;
  virtual std::string model_id() const = 0;
};

struct RetryPolicy {
  int max_attempts = 4;
  int initial_backoff_ms = 250;
  double backoff_multiplier = 2.0;
};

struct ProviderConfig {
  std::string base_url;
  std::string model_id;
  std::string api_key_env = "UQCODE_API_KEY";
  double temperature = 1.0;
  int top_k_logprobs = 8;
  int max_in_flight = 4;
  RetryPolicy retry;
  double price_per_1m_input = 0.0;
  double price_per_1m_output = 0.0;
  std::optional<int> max_tokens;
  bool verbose = false;  // log request/response bodies (keys redacted)
};

/// input/1e6 * price_in + output/1e6 * price_out, in dollars.
double estimate_cost(long input_tokens, long output_tokens, const ProviderConfig& config);

struct PromptCost {
  double generation_cost = 0.0;
  double sampled_generation_cost = 0.0;
  double scoring_cost = 0.0;

  double total() const { return generation_cost + sampled_generation_cost + scoring_cost; }
};

/// Per-prompt dollar accounting. Entries are keyed by problem id; totals are
/// summed in key order so they do not depend on completion order.
class CostLedger {
 public:
  void add_generation(const std::string& problem_id, double dollars);
  void add_sampled_generation(const std::string& problem_id, double dollars);
  void add_scoring(const std::string& problem_id, double dollars);

  PromptCost prompt_cost(const std::string& problem_id) const;
  PromptCost totals() const;
  std::map<std::string, PromptCost> entries() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, PromptCost> entries_;
};

/// Original response via greedy decoding (temperature 0) plus m samples at the
/// configured temperature, with token logprobs captured when available.
ResponseSet generate_response_set(const std::string& problem_id, const std::string& prompt,
                                  ChatProvider& provider, const ProviderConfig& config, int m,
                                  CostLedger* ledger = nullptr);

Generation generation_from_response(const ChatResponse& response, const std::string& problem_id,
                                    Role role, std::optional<int> sample_index,
                                    double temperature);

/// Test/offline provider driven by a callback.
class CallbackChatProvider : public ChatProvider {
 public:
  using Handler = std::function<ChatResponse(const ChatRequest&)>;
  explicit CallbackChatProvider(Handler handler) : handler_(std::move(handler)) {}
  ChatResponse complete(const ChatRequest& request) override { return handler_(request); }

 private:
  Handler handler_;
};

/// Deterministic local embedder: hashed bag-of-tokens, L2-normalized. Stands in
/// for a remote code-embedding endpoint in offline runs.
class HashingEmbedder : public EmbeddingProvider {
 public:
  explicit HashingEmbedder(int dimension = 64);
  std::vector<double> embed(const std::string& text) override;
  std::string model_id() const override;

 private:
  int dimension_;
};

/// Memoizing wrapper so repeated inputs hit the remote endpoint once.
class CachingEmbedder : public EmbeddingProvider {
 public:
  explicit CachingEmbedder(EmbeddingProvider& inner);
  std::vector<double> embed(const std::string& text) override;
  std::string model_id() const override;
  long backend_calls() const;

 private:
  EmbeddingProvider& inner_;
  mutable std::mutex mu_;
  std::map<std::string, std::vector<double>> cache_;
  long backend_calls_ = 0;
};

}  // namespace uqcode
