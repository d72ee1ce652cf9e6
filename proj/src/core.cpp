#include "cpeak/core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace cpeak {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("permutation must have at least one entry");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[v] = true;
  }
}

PeakSet::PeakSet(int n, std::vector<int> elements, bool allow_above_n)
    : n_(n), elements_(std::move(elements)) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw std::invalid_argument("duplicate element in set");
  }
  if (!elements_.empty()) {
    if (elements_.front() < 1) throw std::invalid_argument("set elements must be positive");
    if (!allow_above_n && elements_.back() > n) {
      throw std::invalid_argument("set element " + std::to_string(elements_.back()) +
                                  " exceeds order " + std::to_string(n));
    }
  }
}

PeakSet PeakSet::at_order(int n) const { return PeakSet(n, elements_, true); }

SetMask PeakSet::mask() const { return to_mask(elements_); }

std::vector<int> RunDecomposition::expand() const {
  std::vector<int> out;
  for (const Run& run : runs) {
    for (int v = run.min(); v <= run.max; ++v) out.push_back(v);
  }
  return out;
}

SetMask circular_peak_mask(std::span<const int> word) {
  SetMask mask = 0;
  for (std::size_t i = 1; i + 1 < word.size(); ++i) {
    if (word[i - 1] < word[i] && word[i] > word[i + 1]) mask |= SetMask{1} << word[i];
  }
  return mask;
}

PeakSet circular_peak_set(const Permutation& p) {
  const auto& w = p.values();
  std::vector<int> peaks;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) peaks.push_back(w[i]);
  }
  return PeakSet(p.size(), std::move(peaks));
}

bool is_feasible(std::span<const int> sorted_elements, int n) {
  for (std::size_t j = 0; j < sorted_elements.size(); ++j) {
    if (sorted_elements[j] < 2 * static_cast<int>(j + 1) + 1) return false;
  }
  return sorted_elements.empty() || sorted_elements.back() <= n;
}

bool is_feasible(const PeakSet& s) { return is_feasible(s.elements(), s.n()); }

RunDecomposition run_decomposition(std::span<const int> sorted_elements) {
  RunDecomposition out;
  for (int v : sorted_elements) {
    if (!out.runs.empty() && out.runs.back().max + 1 == v) {
      out.runs.back().max = v;
      ++out.runs.back().length;
    } else {
      out.runs.push_back({v, 1});
    }
  }
  return out;
}

Permutation reduce_subsequence(const Permutation& p, std::span<const int> positions) {
  if (positions.empty()) throw std::invalid_argument("reduction needs at least one position");
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (positions[j] < 1 || positions[j] > p.size() ||
        (j > 0 && positions[j] <= positions[j - 1])) {
      throw std::invalid_argument("positions must be strictly increasing within [1, n]");
    }
  }
  std::vector<int> picked;
  picked.reserve(positions.size());
  for (int pos : positions) picked.push_back(p[pos]);
  std::vector<int> sorted = picked;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : picked) {
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  }
  return Permutation(std::move(picked));
}

SetMask to_mask(std::span<const int> elements) {
  SetMask mask = 0;
  for (int v : elements) {
    if (v < 0 || v > kMaxMaskValue) throw std::out_of_range("set element outside mask range");
    mask |= SetMask{1} << v;
  }
  return mask;
}

std::vector<int> from_mask(SetMask mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

int mask_size(SetMask mask) { return std::popcount(mask); }

bool table_order_less(SetMask a, SetMask b) {
  const int sa = mask_size(a), sb = mask_size(b);
  if (sa != sb) return sa < sb;
  const auto ea = from_mask(a), eb = from_mask(b);
  return ea < eb;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, bool allow_space_sep) {
  std::vector<int> out;
  std::size_t i = 0;
  auto is_sep = [&](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  bool expect_value = false;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    if (i >= text.size()) break;
    if (text[i] == ',') {
      if (!expect_value && out.empty()) throw std::invalid_argument("leading comma in list");
      if (expect_value) throw std::invalid_argument("empty list entry");
      expect_value = true;
      ++i;
      continue;
    }
    if (!out.empty() && !expect_value && !allow_space_sep) {
      throw std::invalid_argument("list entries must be comma-separated");
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j) {
      throw std::invalid_argument("not an integer: '" + std::string(text.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    expect_value = false;
    i = j;
  }
  if (expect_value) throw std::invalid_argument("trailing comma in list");
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  const bool compact = !text.empty() &&
                       std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (compact && text.size() > 1) {
    std::vector<int> values;
    for (char c : text) values.push_back(c - '0');
    return Permutation(std::move(values));
  }
  return Permutation(parse_int_list(text, true));
}

std::vector<int> parse_set(std::string_view text) {
  auto out = parse_int_list(text, false);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("duplicate element in set");
  }
  return out;
}

std::string format_set(std::span<const int> elements) {
  std::string out;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(elements[j]);
  }
  return out;
}

std::string format_set_braced(std::span<const int> elements) {
  if (elements.empty()) return "{}";
  std::string out = "{";
  for (std::size_t j = 0; j < elements.size(); ++j) {
    if (j) out += ", ";
    out += std::to_string(elements[j]);
  }
  return out + "}";
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  const bool compact = p.size() <= 9;
  for (int v : p.values()) {
    if (!compact && !out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

BigInt pow2(int exponent) {
  if (exponent < 0) throw std::domain_error("negative power of two");
  BigInt one = 1;
  return one << exponent;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace cpeak
