#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "uqcode/core.hpp"
#include "uqcode/gateway.hpp"

namespace uqcode {

enum class Verdict { equivalent, not_equivalent };

struct EquivalenceVerdict {
  std::string left_id;
  std::string right_id;
  Verdict verdict = Verdict::not_equivalent;
  std::string judge_model;
  bool from_cache = false;
  int attempts = 1;
  bool short_circuit = false;  // byte-identical code, no comparison performed
};

enum class LanguageKind { general_code, sql };

LanguageKind language_kind_for(const std::string& language);

inline constexpr const char* kJudgeTemplateVersion = "equivalence-v1";

/// Verbatim judge instruction text; the general template still contains the
/// [LANGUAGE] placeholder.
const std::string& judge_template_text(LanguageKind kind);

/// Instruction template with [LANGUAGE] substituted, followed by the two
/// snippets under neutral "Code A:" / "Code B:" headers.
std::string build_equivalence_prompt(const std::string& language, const std::string& code_a,
                                     const std::string& code_b);

/// Strict verdict parsing: exact match first, then a case-insensitive
/// whitespace-trimmed match, "Not Equivalent" before "Equivalent".
Verdict parse_verdict(const std::string& raw);

/// Order-independent verdict store. Pair keys canonicalize operand order, so
/// lookups with swapped snippets return the same entry. Optionally persisted
/// as an append-only line-delimited file.
class VerdictCache {
 public:
  VerdictCache() = default;
  explicit VerdictCache(const std::string& path);

  std::optional<Verdict> lookup(const std::string& judge_model, LanguageKind kind,
                                const std::string& code_a, const std::string& code_b) const;
  void store(const std::string& judge_model, LanguageKind kind, const std::string& code_a,
             const std::string& code_b, Verdict verdict);
  size_t size() const;

  static std::string pair_key(LanguageKind kind, const std::string& code_a,
                              const std::string& code_b);

 private:
  mutable std::shared_mutex mu_;
  std::map<std::string, Verdict> entries_;
  std::string path_;
  std::ofstream appender_;
};

/// Seam used by the sampling scorers; implementations may be LLM-backed,
/// scripted, or local heuristics.
class PairJudge {
 public:
  virtual ~PairJudge() = default;
  virtual EquivalenceVerdict judge_pair(const Generation& a, const Generation& b,
                                        const std::string& language) = 0;
};

struct JudgeConfig {
  std::string model_id;
  double temperature = 0.0;
  int malformed_retry_budget = 2;  // retries after the first malformed reply
};

/// LLM-backed functional-equivalence judge with caching, a reflexive
/// short-circuit for byte-identical code, and bounded retries on malformed
/// replies. Exhausting the retry budget is an error, never a silent verdict.
class EquivalenceJudge : public PairJudge {
 public:
  EquivalenceJudge(ChatProvider& provider, JudgeConfig config, VerdictCache* cache = nullptr,
                   CostLedger* ledger = nullptr, const ProviderConfig* pricing = nullptr);

  EquivalenceVerdict judge_pair(const Generation& a, const Generation& b,
                                const std::string& language) override;
  long llm_calls() const;

 private:
  ChatProvider& provider_;
  JudgeConfig config_;
  VerdictCache* cache_;
  CostLedger* ledger_;
  const ProviderConfig* pricing_;
  mutable std::mutex mu_;
  long llm_calls_ = 0;
};

/// Local judge: equivalent iff the extracted code matches byte-for-byte after
/// trimming. Deterministic stand-in for offline runs.
class ExactMatchJudge : public PairJudge {
 public:
  EquivalenceVerdict judge_pair(const Generation& a, const Generation& b,
                                const std::string& language) override;
};

/// Judge backed by a fixed verdict table (canonical pair key -> verdict), with
/// a configurable fallback for missing pairs.
class TableJudge : public PairJudge {
 public:
  enum class Fallback { error, exact_match, not_equivalent };

  explicit TableJudge(Fallback fallback = Fallback::error) : fallback_(fallback) {}

  void set(LanguageKind kind, const std::string& code_a, const std::string& code_b,
           Verdict verdict);
  void load(const std::string& path);  // line-delimited records

  EquivalenceVerdict judge_pair(const Generation& a, const Generation& b,
                                const std::string& language) override;
  long lookups() const { return lookups_; }

 private:
  Fallback fallback_;
  std::map<std::string, Verdict> entries_;
  long lookups_ = 0;
};

std::string generation_ref(const Generation& gen);

}  // namespace uqcode
