#include "cpeak/recurrences.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cpeak {

namespace {

SetMask bit(int v) { return SetMask{1} << v; }

SetMask interval_mask(int lo, int hi) {
  SetMask m = 0;
  for (int v = lo; v <= hi; ++v) m |= bit(v);
  return m;
}

CountTable base_table() {
  CountTable t(3);
  t.set(0, 4);
  t.set(bit(3), 2);
  return t;
}

void check_tail_arguments(int n, int k, std::span<const int> s) {
  if (k < 0) throw std::domain_error("tail length must be non-negative");
  for (int v : s) {
    if (v < 3 || v > n - k - 1) {
      throw std::domain_error("set element " + std::to_string(v) + " outside [3, " +
                              std::to_string(n - k - 1) + "]");
    }
  }
}

}  // namespace

DpOptions DpOptions::from_environment() {
  DpOptions options;
  if (const char* env = std::getenv("CPEAK_DP_LIMIT")) {
    try {
      options.limit = std::clamp(std::stoi(env), 3, kHardCap);
    } catch (const std::exception&) {
    }
  }
  return options;
}

CountTable dp_step(const CountTable& table) {
  const int n = table.n();
  if (n < 3) throw std::domain_error("dp_step requires a table at order >= 3");
  if (n + 1 > kMaxMaskValue) throw ScaleError("dp_step: order exceeds mask width");
  const SetMask top = bit(n + 1);
  CountTable next(n + 1);
  // Push form of the insertion recurrence: each entry T feeds T itself
  // (new maximum at either end), T + {n+1} with coefficient n-1-2|T|, and
  // (T - {j}) + {n+1} with coefficient 2 for each j in T.
  for (const auto& [key, count] : table.entries()) {
    next.add(key, 2 * count);

    const int coefficient = n - 1 - 2 * mask_size(key);
    if (coefficient < 0 || (coefficient == 0 && is_feasible(from_mask(key | top), n + 1))) {
      throw std::logic_error("dp_step: insertion coefficient must be positive for a feasible target");
    }
    if (coefficient > 0) next.add(key | top, coefficient * count);

    for (SetMask rest = key; rest != 0; rest &= rest - 1) {
      const SetMask j = rest & (~rest + 1);
      next.add((key & ~j) | top, 2 * count);
    }
  }
  for (const auto& [key, count] : next.entries()) {
    if (count < 0 || !is_feasible(from_mask(key), n + 1)) {
      throw std::logic_error("dp_step produced an invalid entry");
    }
  }
  return next;
}

std::vector<CountTable> dp_tables(int n_max, const DpOptions& options) {
  if (n_max < 3) throw std::domain_error("dp_tables requires n_max >= 3");
  const int limit = std::min(options.limit, DpOptions::kHardCap);
  if (n_max > limit) {
    throw ScaleError("DP scale exceeded: n = " + std::to_string(n_max) + " > limit " + std::to_string(limit));
  }
  std::vector<CountTable> tables;
  tables.reserve(n_max - 2);
  tables.push_back(base_table());
  while (tables.back().n() < n_max) tables.push_back(dp_step(tables.back()));
  return tables;
}

BigInt scale_by_doubling(std::span<const int> elements, int n_target, const BigInt& base_count) {
  const int m = elements.empty() ? 3 : *std::max_element(elements.begin(), elements.end());
  if (n_target < m) throw std::domain_error("scale_by_doubling: target order below max S");
  return pow2(n_target - m) * base_count;
}

BigInt insertion_rhs(const CountTable& previous, SetMask s) {
  const int n = previous.n() + 1;
  if ((s & ~interval_mask(1, n - 1)) != 0) throw std::domain_error("insertion_rhs: S must lie in [1, n-1]");
  BigInt out = BigInt(n - 2 - 2 * mask_size(s)) * previous.at(s);
  for (int j = 1; j < n; ++j) {
    if ((s & bit(j)) == 0) out += 2 * previous.at(s | bit(j));
  }
  return out;
}

BigInt tail_recurrence_rhs(int n, int k, std::span<const int> s, const CountLookup& lookup) {
  check_tail_arguments(n, k, s);
  const SetMask base = to_mask(s);
  BigInt out = BigInt(2 * (k + 1)) * lookup(n - 1, base | interval_mask(n - k, n - 1));
  if (k > 0) out += BigInt(k * (k + 1)) * lookup(n - 2, base | interval_mask(n - k, n - 2));
  return out;
}

BigInt cp_by_tail_recurrence(int n, int k, std::span<const int> s, const std::vector<CountTable>& tables) {
  check_tail_arguments(n, k, s);
  if (n < k + 4) {
    throw std::domain_error("tail recurrence is only established for n >= k + 4");
  }
  auto lookup = [&](int order, SetMask key) -> BigInt {
    const int index = order - 3;
    if (index < 0 || index >= static_cast<int>(tables.size())) {
      throw std::out_of_range("no table for order " + std::to_string(order));
    }
    return tables[index].at(key);
  };
  return tail_recurrence_rhs(n, k, s, lookup);
}

BigInt cp_by_tail_recurrence(int n, int k, std::span<const int> s, const DpOptions& options) {
  check_tail_arguments(n, k, s);
  if (n < k + 4) {
    throw std::domain_error("tail recurrence is only established for n >= k + 4");
  }
  return cp_by_tail_recurrence(n, k, s, dp_tables(n - 1, options));
}

}  // namespace cpeak
