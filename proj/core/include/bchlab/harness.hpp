#pragma once

// Ground truth against prediction for C_(q,q+1,3,h): one CodeRecord per code,
// sweeps over (p, s, h), the family checks and the two conjectures.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bchlab/distance.hpp"
#include "bchlab/theory.hpp"

namespace bchlab {

struct AnalyzeOptions {
  EngineOptions engine;
  /// Field-table cap (largest q).
  std::uint32_t max_table_q = 4096;
  std::uint32_t w_max = 5;
  /// Resolve four-or-five through the quadruple search.
  bool resolve = true;
  /// Also run dual-enum when q is within its cap and compare with root count.
  bool cross_check_dual = true;
};

/// Raises the column-search and root-count caps to max_q when it exceeds them.
AnalyzeOptions with_table_cap(AnalyzeOptions options, std::uint32_t max_q);

struct CodeRecord {
  std::uint32_t p = 0, s = 0, q = 0, h = 0, n = 0;
  std::optional<std::uint32_t> k, d, k_dual, d_dual;
  std::uint32_t gcd_2h_plus_1 = 0;
  std::string cls = "undetermined";
  std::optional<std::uint32_t> locality;
  std::optional<bool> d_optimal, k_optimal;
  std::optional<std::uint32_t> predicted_k, predicted_k_dual;
  std::string predicted_d;
  std::optional<std::uint32_t> resolved_d;
  std::optional<std::int64_t> bounds_lo, bounds_hi;
  bool match = true;
  /// Resolved prediction differs from the computed d (q even).
  bool finding = false;
  /// Names of failed checks, ';'-separated.
  std::string failed_checks;
  std::string d_method = "uncomputed", d_dual_method = "uncomputed";
  double runtime_ms = 0.0;

  friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

/// Builds the code, runs the engines allowed by the caps, re-verifies every
/// witness and compares with the predictions. Engines past their caps leave
/// their fields unset. Throws std::invalid_argument for a non-prime p, s = 0
/// or h > q, and CapExceeded when q exceeds options.max_table_q.
CodeRecord analyze(std::uint32_t p, std::uint32_t s, std::uint32_t h, const AnalyzeOptions& options = {});

struct SweepSpec {
  std::vector<std::uint32_t> primes;
  std::uint32_t s_min = 1, s_max = 0;
  /// Empty means every h in [0, q]; values above q are skipped.
  std::vector<std::uint32_t> h_values;
};

/// Records in (p, s, h) order with p ascending. Rows run in parallel over
/// options.engine.threads workers; (p, s) pairs past the table cap are skipped.
std::vector<CodeRecord> sweep(const SweepSpec& spec, const AnalyzeOptions& options = {});

/// (p, s) with p^s <= max_q, p prime, ordered by p then s.
std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_up_to(std::uint32_t max_q);

struct FamilyCheck {
  std::string family;
  std::uint32_t p = 0, s = 0, q = 0, h = 0;
  std::string claim;
  std::optional<std::uint32_t> k, d, d_dual;
  /// False for claims that are only recorded.
  bool asserted = true;
  bool holds = false;
};

struct TheoremReport {
  std::vector<CodeRecord> records;
  std::vector<FamilyCheck> families;

  bool ok() const;
  std::vector<CodeRecord> mismatches() const;
  std::vector<CodeRecord> findings() const;
};

/// analyze for every prime power q <= max_q and every h, plus the in-cap
/// instances of the six parameter families.
TheoremReport check_theorems(std::uint32_t max_q, const AnalyzeOptions& options = {});

/// Family instances (p, s) with q <= max_q, each checked against its claim.
std::vector<FamilyCheck> check_families(std::uint32_t max_q, const AnalyzeOptions& options = {});

enum class ConjectureStatus { Confirmed, Refuted, Unreached };
std::string_view to_string(ConjectureStatus s);

struct ConjectureInstance {
  std::uint32_t p = 0, s = 0, q = 0, h = 0;
  ConjectureStatus status = ConjectureStatus::Unreached;
  std::optional<std::uint32_t> computed;
  std::uint32_t expected = 0;
  std::string note;
};

struct ConjectureParams {
  /// dual-distance-q-p: odd primes up to p_max.
  std::uint32_t p_max = 13;
  /// Fixed extension degree; unset means the conjecture's default.
  std::optional<std::uint32_t> s;
};

struct ConjectureReport {
  std::string name;
  std::vector<ConjectureInstance> instances;
  bool any_refuted() const;
};

/// name is dual-distance-q-p (d_dual = q - p for h = (p-1)/2, p >= 5, default
/// s = 2) or even-s-amds (d = 4 for q = 2^s, h = 4, default s in {6, 8, 10, 12}).
/// Throws std::invalid_argument for any other name.
ConjectureReport check_conjecture(const std::string& name, const ConjectureParams& params,
                                  const AnalyzeOptions& options = {});

}  // namespace bchlab
