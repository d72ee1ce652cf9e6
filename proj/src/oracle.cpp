#include "cpeak/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

namespace cpeak {

namespace {

void check_scale(int n, const OracleOptions& options) {
  const int limit = std::min(options.limit, OracleOptions::kHardCap);
  if (n > limit) {
    throw ScaleError("oracle scale exceeded: n = " + std::to_string(n) + " > limit " +
                     std::to_string(limit));
  }
}

// Visits every permutation of [n] whose first entry is `first`, in lexicographic order.
template <typename Visit>
void for_each_with_first(int n, int first, Visit&& visit) {
  std::vector<int> word(n);
  word[0] = first;
  int pos = 1;
  for (int v = 1; v <= n; ++v) {
    if (v != first) word[pos++] = v;
  }
  do {
    visit(std::span<const int>(word));
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

}  // namespace

OracleOptions OracleOptions::from_environment() {
  OracleOptions options;
  if (const char* env = std::getenv("CPEAK_ORACLE_LIMIT")) {
    try {
      options.limit = std::clamp(std::stoi(env), 1, kHardCap);
    } catch (const std::exception&) {
      // Unparsable override: keep the default.
    }
  }
  return options;
}

CountTable oracle_table(int n, const OracleOptions& options) {
  if (n < 1) throw std::domain_error("oracle order must be positive");
  check_scale(n, options);

  const unsigned workers = std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(n));
  std::vector<std::unordered_map<SetMask, std::uint64_t>> partial(workers);

  auto work = [&](unsigned id) {
    auto& counts = partial[id];
    for (int first = 1 + static_cast<int>(id); first <= n; first += static_cast<int>(workers)) {
      for_each_with_first(n, first, [&](std::span<const int> word) { ++counts[circular_peak_mask(word)]; });
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  CountTable table(n);
  for (const auto& counts : partial) {
    for (const auto& [key, count] : counts) table.add(key, BigInt(count));
  }
  return table;
}

BigInt oracle_count(const PeakSet& s, const OracleOptions& options) {
  check_scale(s.n(), options);
  if (s.max() > s.n()) return 0;
  const SetMask target = s.mask();
  std::uint64_t count = 0;
  for (int first = 1; first <= s.n(); ++first) {
    for_each_with_first(s.n(), first, [&](std::span<const int> word) {
      if (circular_peak_mask(word) == target) ++count;
    });
  }
  return count;
}

std::vector<Permutation> enumerate_class(const PeakSet& s, const OracleOptions& options) {
  check_scale(s.n(), options);
  std::vector<Permutation> out;
  if (s.max() > s.n()) return out;
  const SetMask target = s.mask();
  for (int first = 1; first <= s.n(); ++first) {
    for_each_with_first(s.n(), first, [&](std::span<const int> word) {
      if (circular_peak_mask(word) == target) out.emplace_back(std::vector<int>(word.begin(), word.end()));
    });
  }
  return out;
}

}  // namespace cpeak
