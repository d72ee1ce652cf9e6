#pragma once

#include <functional>
#include <vector>

#include "cpeak/count_table.hpp"

namespace cpeak {

struct DpOptions {
  static constexpr int kDefaultLimit = 20;
  /// Keys are 64-bit masks over values 1..63.
  static constexpr int kHardCap = kMaxMaskValue;

  int limit = kDefaultLimit;

  /// Defaults, with `limit` overridden by CPEAK_DP_LIMIT when set.
  static DpOptions from_environment();
};

/// Complete table at order n+1 from the table at order n >= 3:
/// S keeps 2 cp_n(S), and S + {n+1} collects the single-insertion terms.
CountTable dp_step(const CountTable& table);

/// Tables for n = 3..n_max; element [n - 3] holds order n.
std::vector<CountTable> dp_tables(int n_max, const DpOptions& options = {});

/// 2^{n_target - m} * base_count, where base_count = cp_m(S) with m = max S
/// (m = 3 for the empty set).
BigInt scale_by_doubling(std::span<const int> elements, int n_target, const BigInt& base_count);

/// cp_n(S + {n}) by the single-insertion recurrence, read from the order n-1
/// table `previous`. S must lie in [1, n-1].
BigInt insertion_rhs(const CountTable& previous, SetMask s);

/// Count lookup by (order, key); used to evaluate the tail recurrence on any table source.
using CountLookup = std::function<BigInt(int order, SetMask key)>;

/// Right side of the tail-run recurrence for cp_n(S + [n-k+1, n]):
///   2(k+1) cp_{n-1}(S + [n-k, n-1]) + k(k+1) cp_{n-2}(S + [n-k, n-2]).
/// Validates S within [3, n-k-1] only; no lower bound on n beyond the
/// lookups being defined.
BigInt tail_recurrence_rhs(int n, int k, std::span<const int> s, const CountLookup& lookup);

/// Same recurrence against DP tables, restricted to n >= k+4.
/// Throws std::domain_error when S meets [n-k, n] or n < k+4.
BigInt cp_by_tail_recurrence(int n, int k, std::span<const int> s, const DpOptions& options = {});
BigInt cp_by_tail_recurrence(int n, int k, std::span<const int> s, const std::vector<CountTable>& tables);

}  // namespace cpeak
