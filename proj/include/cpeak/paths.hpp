#pragma once

#include <string>
#include <vector>

#include "cpeak/core.hpp"

namespace cpeak {

/// Lattice path from (start, 0) over horizon steps H = (1, 0) and rise
/// steps R = (2, 1).
struct LatticePath {
  enum class Step : char { H = 'H', R = 'R' };

  int start = 0;
  std::vector<Step> steps;

  int rises() const;
  int end_x() const;
  int end_y() const { return rises(); }
  std::string word() const;  // "HRH"; empty for the empty path

  bool operator==(const LatticePath&) const = default;
};

LatticePath parse_path(int start, std::string_view word);

/// All paths from (r, 0) to (n, k), lexicographic with H < R.
std::vector<LatticePath> enumerate_paths(int r, int n, int k);

/// Weight of each step under shift i: H at height y gives 2i + 2(y+1),
/// R leaving height y gives (y+i+1)(y+i+2).
std::vector<BigInt> step_weights(int shift, const LatticePath& path);
BigInt path_weight(int shift, const LatticePath& path);

/// w(i, r, n, k) as a literal sum over enumerated paths.
BigInt w_by_enumeration(int shift, int r, int n, int k);

/// Complete homogeneous symmetric polynomial h_degree(values...), by a
/// degree-by-variable recurrence.
BigInt complete_homogeneous(std::span<const BigInt> values, int degree);

/// w(i, r, n, k) = 2^{d} prod_{m<k} (m+i+1)(m+i+2) h_d(i+1, ..., i+k+1), d = n-r-2k.
BigInt w_closed(int shift, int r, int n, int k);

/// cp_n(S + [n-k+1, n]) by peeling the tail run onto S's last run:
///   sum_i w(i, r, n-i, k-i) cp_{r+i}(S + [r+1, r+i]),  r = max S.
/// Inner counts recurse through the same expansion down to a single run.
/// Throws std::domain_error when S is empty or not inside [3, n-k-1].
BigInt cp_strip_last_run(int n, int k, std::span<const int> s);

/// Nested-sum formula over the run decomposition (two or more runs).
/// Throws std::domain_error for fewer than two runs.
BigInt cp_nested_paths(const PeakSet& s);

/// cp_n(S) for any S through the closed forms and path formulas, with no
/// table construction. Throws std::domain_error for n < 3.
BigInt cp_count(const PeakSet& s);

/// CSV "i,r,n,k,w" for 0 <= i <= max_shift, 0 <= k <= max_k, 0 <= n-r-2k <= max_degree.
std::string weight_table_csv(int max_shift, int max_k, int max_degree, int r = 0);

}  // namespace cpeak
