#pragma once

#include <vector>

#include "cpeak/count_table.hpp"

namespace cpeak {

/// Exhaustive enumeration of S_n. Runtime grows as n!, so orders above
/// `limit` are refused with ScaleError rather than truncated.
struct OracleOptions {
  /// Hard ceiling; 12! permutations take on the order of a minute per core.
  static constexpr int kHardCap = 12;
  static constexpr int kDefaultLimit = 9;

  int limit = kDefaultLimit;
  unsigned threads = 1;

  /// Defaults, with `limit` overridden by CPEAK_ORACLE_LIMIT when set
  /// (clamped to kHardCap).
  static OracleOptions from_environment();
};

BigInt oracle_count(const PeakSet& s, const OracleOptions& options = {});

/// Every permutation with circular peak set exactly S, lexicographic.
std::vector<Permutation> enumerate_class(const PeakSet& s, const OracleOptions& options = {});

/// All class counts of S_n from one pass over the permutations.
CountTable oracle_table(int n, const OracleOptions& options = {});

}  // namespace cpeak
