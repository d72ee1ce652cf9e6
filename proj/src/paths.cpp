#include "cpeak/paths.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cpeak/closed_forms.hpp"

namespace cpeak {

int LatticePath::rises() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::R));
}

int LatticePath::end_x() const {
  return start + static_cast<int>(steps.size()) + rises();
}

std::string LatticePath::word() const {
  std::string out;
  for (Step s : steps) out += static_cast<char>(s);
  return out;
}

LatticePath parse_path(int start, std::string_view word) {
  LatticePath path{start, {}};
  for (char c : word) {
    if (c == 'H') path.steps.push_back(LatticePath::Step::H);
    else if (c == 'R') path.steps.push_back(LatticePath::Step::R);
    else throw std::invalid_argument(std::string("path word may only contain H and R, got '") + c + "'");
  }
  return path;
}

std::vector<LatticePath> enumerate_paths(int r, int n, int k) {
  std::vector<LatticePath> out;
  const int horizons = n - r - 2 * k;
  if (k < 0 || horizons < 0) return out;
  LatticePath current{r, {}};
  std::function<void(int, int)> extend = [&](int h_left, int r_left) {
    if (h_left == 0 && r_left == 0) {
      out.push_back(current);
      return;
    }
    if (h_left > 0) {
      current.steps.push_back(LatticePath::Step::H);
      extend(h_left - 1, r_left);
      current.steps.pop_back();
    }
    if (r_left > 0) {
      current.steps.push_back(LatticePath::Step::R);
      extend(h_left, r_left - 1);
      current.steps.pop_back();
    }
  };
  extend(horizons, k);
  return out;
}

std::vector<BigInt> step_weights(int shift, const LatticePath& path) {
  std::vector<BigInt> out;
  out.reserve(path.steps.size());
  int y = 0;
  for (auto step : path.steps) {
    if (step == LatticePath::Step::H) {
      out.emplace_back(2 * shift + 2 * (y + 1));
    } else {
      out.push_back(BigInt(y + shift + 1) * (y + shift + 2));
      ++y;
    }
  }
  return out;
}

BigInt path_weight(int shift, const LatticePath& path) {
  BigInt product = 1;
  for (const auto& w : step_weights(shift, path)) product *= w;
  return product;
}

BigInt w_by_enumeration(int shift, int r, int n, int k) {
  BigInt sum = 0;
  for (const auto& path : enumerate_paths(r, n, k)) sum += path_weight(shift, path);
  return sum;
}

BigInt complete_homogeneous(std::span<const BigInt> values, int degree) {
  if (degree < 0) return 0;
  // h[d] over the variables seen so far; adding variable v gives
  // h'[d] = h[d] + v h'[d-1].
  std::vector<BigInt> h(degree + 1, BigInt(0));
  h[0] = 1;
  for (const BigInt& v : values) {
    for (int d = 1; d <= degree; ++d) h[d] += v * h[d - 1];
  }
  return h[degree];
}

BigInt w_closed(int shift, int r, int n, int k) {
  const int degree = n - r - 2 * k;
  if (k < 0 || degree < 0) return 0;
  BigInt rises = 1;
  for (int m = 0; m < k; ++m) rises *= BigInt(m + shift + 1) * (m + shift + 2);
  std::vector<BigInt> values;
  for (int m = 0; m <= k; ++m) values.emplace_back(shift + m + 1);
  return pow2(degree) * rises * complete_homogeneous(values, degree);
}

namespace {

BigInt cp_single_run(int n, const Run& run) {
  return pow2(n - run.max) * cp_tail_run(run.max, run.length);
}

// cp_n(S) using only the last-run expansion and single-run closed forms.
BigInt cp_by_stripping(const PeakSet& s) {
  if (!is_feasible(s)) return 0;
  if (s.empty()) return cp_empty(s.n());
  const auto runs = run_decomposition(s).runs;
  const Run& last = runs.back();
  if (runs.size() == 1) return cp_single_run(s.n(), last);
  const std::vector<int> rest(s.elements().begin(), s.elements().end() - last.length);
  return pow2(s.n() - last.max) * cp_strip_last_run(last.max, last.length, rest);
}

}  // namespace

BigInt cp_strip_last_run(int n, int k, std::span<const int> s) {
  if (s.empty()) throw std::domain_error("cp_strip_last_run needs a non-empty S; use cp_tail_run");
  if (k < 0) throw std::domain_error("tail length must be non-negative");
  for (int v : s) {
    if (v < 3 || v > n - k - 1) throw std::domain_error("S must lie in [3, n-k-1]");
  }
  std::vector<int> whole(s.begin(), s.end());
  for (int v = n - k + 1; v <= n; ++v) whole.push_back(v);
  if (!is_feasible(whole, n)) return 0;

  const int r = *std::max_element(s.begin(), s.end());
  BigInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    const BigInt w = w_closed(i, r, n - i, k - i);
    if (w == 0) continue;
    std::vector<int> inner(s.begin(), s.end());
    for (int v = r + 1; v <= r + i; ++v) inner.push_back(v);
    sum += w * cp_by_stripping(PeakSet(r + i, std::move(inner)));
  }
  return sum;
}

BigInt cp_nested_paths(const PeakSet& s) {
  const auto runs = run_decomposition(s).runs;
  const int m = static_cast<int>(runs.size());
  if (m < 2) throw std::domain_error("nested path formula needs at least two runs");
  if (!is_feasible(s)) return 0;

  // runs[0..m-1] hold (r_1, k_1) .. (r_m, k_m). Level j = 1..m-1 chooses i_j
  // in [0, k_{m-j+1} + i_{j-1}], weighted by
  // w(i_j, r_{m-j}, r_{m-j+1} + i_{j-1} - i_j, k_{m-j+1} + i_{j-1} - i_j).
  auto r_of = [&](int index) { return runs[index - 1].max; };
  auto k_of = [&](int index) { return runs[index - 1].length; };

  std::function<BigInt(int, int)> level = [&](int j, int i_prev) -> BigInt {
    if (j == m) {
      const int top = r_of(1) + i_prev;
      return cp_tail_run(top, k_of(1) + i_prev);
    }
    BigInt sum = 0;
    const int upper = k_of(m - j + 1) + i_prev;
    for (int i = 0; i <= upper; ++i) {
      const BigInt w = w_closed(i, r_of(m - j), r_of(m - j + 1) + i_prev - i, upper - i);
      if (w == 0) continue;
      sum += w * level(j + 1, i);
    }
    return sum;
  };
  return pow2(s.n() - r_of(m)) * level(1, 0);
}

BigInt cp_count(const PeakSet& s) {
  if (s.n() < 3) throw std::domain_error("cp_count requires n >= 3");
  if (!is_feasible(s)) return 0;
  if (s.empty()) return cp_empty(s.n());
  const auto runs = run_decomposition(s).runs;
  if (runs.size() == 1) return cp_single_run(s.n(), runs.front());
  return cp_nested_paths(s);
}

std::string weight_table_csv(int max_shift, int max_k, int max_degree, int r) {
  std::ostringstream out;
  out << "i,r,n,k,w\n";
  for (int i = 0; i <= max_shift; ++i) {
    for (int k = 0; k <= max_k; ++k) {
      for (int d = 0; d <= max_degree; ++d) {
        const int n = r + 2 * k + d;
        out << i << ',' << r << ',' << n << ',' << k << ',' << w_closed(i, r, n, k) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace cpeak
