#pragma once

// Ground-truth minimum distances for C_(q,q+1,delta,h) and its dual.
//
//   column search  smallest set of F_q-dependent columns of the expanded
//                  parity-check matrix (d of the code)
//   root count     weight of c_(a,b) as (q+1) minus the number of roots of
//                  b u^(2h+2) + a u^(2h+1) + a^q u + b^q on U_{q+1} (d of the dual)
//   dual enum      every word of the span of a kernel basis of the
//                  generator matrix (d of the dual)
//   exhaustive     every word of the span of a generator matrix
//
// Results carry a witness codeword that verify_witness re-checks against
// the code's own parity rows or generator matrix.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bchlab/bch_code.hpp"
#include "bchlab/matrix.hpp"

namespace bchlab {

enum class DistanceMethod { ColumnSearch, RootCount, DualEnum, Exhaustive };
enum class Subject { Code, Dual };

std::string_view to_string(DistanceMethod m);
/// Accepts column-search, root-count, dual-enum, exhaustive; throws std::invalid_argument.
DistanceMethod parse_method(std::string_view name);

struct DistanceResult {
  /// Exact distance, or nullopt when no word of weight <= searched_up_to exists.
  std::optional<std::uint32_t> value;
  std::uint32_t searched_up_to = 0;
  DistanceMethod method = DistanceMethod::ColumnSearch;
  Subject subject = Subject::Code;
  /// Minimum-weight codeword (length n); empty when value is nullopt.
  std::vector<Elem> witness;
  /// Dependent column set for column search: the support of the witness.
  std::vector<std::uint32_t> support;
  /// (a, b) with witness = c_(a,b) for root count.
  std::optional<std::pair<Elem, Elem>> trace_pair;
};

struct EngineOptions {
  unsigned threads = 1;
  std::uint32_t column_search_max_q = 512;
  std::uint32_t root_count_max_q = 1024;
  std::uint32_t dual_enum_max_q = 81;
  /// Largest number of words an exhaustive enumeration may visit.
  std::uint64_t exhaustive_cap = std::uint64_t(1) << 26;
};

/// Smallest w <= w_max such that some w columns of expanded_parity_matrix
/// are linearly dependent over GF(q). The witness is the lexicographically
/// first dependent support set with its relation as the codeword.
/// Throws CapExceeded when q > options.column_search_max_q.
DistanceResult min_distance_by_columns(const BchCode& code, std::uint32_t w_max = 5, const EngineOptions& options = {});

/// Exact dual distance. RootCount needs delta = 3; DualEnum works for any code.
/// Throws CapExceeded past the per-method cap.
DistanceResult dual_min_distance(const BchCode& code, DistanceMethod method, const EngineOptions& options = {});

/// Minimum weight over the nonzero words of the row space of a full-rank
/// generator matrix. Throws std::domain_error for a zero-dimensional code and
/// CapExceeded when q^k > cap.
DistanceResult exhaustive_min_distance(const FieldContext& ctx, const Matrix& generator,
                                       std::uint64_t cap = std::uint64_t(1) << 26, unsigned threads = 1);

/// Re-checks a result's witness against the code (or its dual).
bool verify_witness(const BchCode& code, const DistanceResult& result);

/// Number of words of each weight 0..n in the row space of a full-rank basis.
std::vector<std::uint64_t> weight_distribution(const FieldContext& ctx, const Matrix& basis,
                                               std::uint64_t cap = std::uint64_t(1) << 26);

/// Minimum distance of the code, obtained from the dual's weight
/// distribution through the MacWilliams transform (exact big-integer
/// arithmetic). Independent of the parity-check and generator routes.
/// nullopt for a zero-dimensional code.
std::optional<std::uint32_t> min_distance_via_macwilliams(const BchCode& code, const EngineOptions& options = {});

/// Orbit representatives of (a, b) != (0, 0) under (a,b) ~ (l a, l b),
/// l in GF(q)*, and (a,b) ~ (a beta^h, b beta^(h+1)). Each is the
/// lexicographically smallest (log a, log b) in its orbit, with zero
/// ordered before every log.
std::vector<std::pair<Elem, Elem>> trace_pair_representatives(const FieldContext& ctx, std::uint32_t h);

/// (q+1) minus the number of u in U_{q+1} with b u^(2h+2) + a u^(2h+1) + a^q u + b^q = 0.
std::uint32_t root_count_weight(const FieldContext& ctx, std::uint32_t h, Elem a, Elem b);

}  // namespace bchlab
