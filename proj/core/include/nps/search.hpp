#pragma once

// Pruned exhaustive enumeration of almost m-ary sequences and of ell-PDPDS.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nps/diffset.hpp"
#include "nps/sequence.hpp"

namespace nps {

struct SearchSpec {
  enum class ZeroMode { Explicit, Consecutive, Count };
  enum class Filter { AnyNps, Uniform, Pair };

  int m = 3;
  int period = 5;

  ZeroMode zero_mode = ZeroMode::Consecutive;
  std::vector<int> zeros;  // Explicit mode
  int zero_count = 0;      // Count mode

  Filter filter = Filter::AnyNps;
  Int gamma1 = 0;  // Uniform: gamma; Pair: value on {ell, N - ell}
  Int gamma2 = 0;  // Pair: value elsewhere

  bool nontrivial_only = false;
  bool dedup_rotation = false;
  bool dedup_scalar = false;
  bool dedup_reversal = false;

  std::uint64_t node_budget = 1'000'000'000;
  std::optional<double> time_budget_seconds;

  bool symmetry_prune = true;     // consecutive zeros, odd prime m
  bool correlation_prune = true;
  bool prefilter = false;         // two-zero specs only
  unsigned jobs = 0;              // 0: NPS_JOBS or hardware concurrency

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
  /// Zero sets the search runs over, each sorted.
  std::vector<std::vector<int>> zero_sets() const;
};

struct SearchReport {
  SearchSpec spec;
  std::vector<AlmostSequence> found;             // canonical forms, sorted
  std::map<std::string, std::uint64_t> counts_by_type;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned_correlation = 0;
  std::uint64_t pruned_symmetry = 0;
  bool exhaustive = true;
};

/// Depth-first assignment of exponents to the non-zero positions. Partial
/// autocorrelation counts are kept per shift; for prime m a branch is cut as
/// soon as no admissible type can still be met. Output does not depend on
/// the job count.
SearchReport exhaustive_search(const SearchSpec& spec);

/// Least sequence among the images of seq under the enabled equivalences.
/// Rotations and reflections are restricted to those fixing the zero set.
AlmostSequence canonical_form(const AlmostSequence& seq, bool rotation, bool scalar, bool reversal);

/// Type pairs (gamma1, gamma2) with |gamma| <= N that pass the divisibility
/// conditions for the spec's two zero-symbols and, when their distance ell
/// has 2*ell != N, the nonexistence bound. Requires exactly two zeros.
std::vector<std::pair<Int, Int>> feasibility_prefilter(const SearchSpec& spec);

struct PdpdsSearchOptions {
  std::uint64_t enumeration_limit = 50'000'000;  // max binomial(n*m - 1, k - 1)
};

/// All ell-PDPDS with exactly these parameters, up to translation; each is
/// reported as its least translate, sorted. ell == 0 searches for a DPDS
/// (lambda3 == lambda1 and mu2 == mu1 are required). Parameter sets that fail
/// the column-sum identities for every column composition give an empty
/// result without enumerating. Throws std::invalid_argument when the
/// enumeration exceeds the limit.
std::vector<DiffSet> pdpds_search(int n, int m, int ell, const PdpdsParams& params,
                                  const PdpdsSearchOptions& options = {});

/// True iff some composition of k into m column sums meets the column-sum
/// identities and the total difference count of the parameters.
bool pdpds_params_admissible(int n, int m, int ell, const PdpdsParams& params);

}  // namespace nps
