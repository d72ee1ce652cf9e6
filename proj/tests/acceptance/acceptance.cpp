// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Published values are written out here rather than read from the library's
// fixture so that a corrupted fixture cannot vouch for itself.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cpeak/closed_forms.hpp"
#include "cpeak/genfunc.hpp"
#include "cpeak/oracle.hpp"
#include "cpeak/paths.hpp"
#include "cpeak/recurrences.hpp"
#include "cpeak/verify.hpp"

namespace {

using namespace cpeak;
using Clock = std::chrono::steady_clock;

struct Cell {
  int n;
  std::vector<int> set;
  long count;
};

const std::vector<Cell> kPeakCounts = {
    {3, {}, 4},          {3, {3}, 2},          {4, {}, 8},           {4, {3}, 4},          {4, {4}, 12},
    {5, {}, 16},         {5, {3}, 8},          {5, {4}, 24},         {5, {5}, 56},         {5, {3, 5}, 4},
    {5, {4, 5}, 12},     {6, {}, 32},          {6, {3}, 16},         {6, {4}, 48},         {6, {5}, 112},
    {6, {6}, 240},       {6, {3, 5}, 8},       {6, {3, 6}, 24},      {6, {4, 5}, 24},      {6, {4, 6}, 72},
    {6, {5, 6}, 144},    {7, {}, 64},          {7, {3}, 32},         {7, {4}, 96},         {7, {5}, 224},
    {7, {6}, 480},       {7, {7}, 992},        {7, {3, 5}, 16},      {7, {3, 6}, 48},      {7, {3, 7}, 112},
    {7, {4, 5}, 48},     {7, {4, 6}, 144},     {7, {4, 7}, 336},     {7, {5, 6}, 288},     {7, {5, 7}, 688},
    {7, {6, 7}, 1200},   {7, {3, 5, 7}, 8},    {7, {3, 6, 7}, 24},   {7, {4, 5, 7}, 24},   {7, {4, 6, 7}, 72},
    {7, {5, 6, 7}, 144}, {8, {}, 128},         {8, {3}, 64},         {8, {4}, 192},        {8, {5}, 448},
    {8, {6}, 960},       {8, {7}, 1984},       {8, {8}, 4032},       {8, {3, 5}, 32},      {8, {3, 6}, 96},
    {8, {3, 7}, 224},    {8, {3, 8}, 480},     {8, {4, 5}, 96},      {8, {4, 6}, 288},     {8, {4, 7}, 672},
    {8, {4, 8}, 1440},   {8, {5, 6}, 576},     {8, {5, 7}, 1376},    {8, {5, 8}, 2976},    {8, {6, 7}, 2400},
    {8, {6, 8}, 5280},   {8, {7, 8}, 8640},    {8, {3, 5, 7}, 16},   {8, {3, 5, 8}, 48},   {8, {3, 6, 7}, 48},
    {8, {3, 6, 8}, 144}, {8, {3, 7, 8}, 288},  {8, {4, 5, 7}, 48},   {8, {4, 5, 8}, 144},  {8, {4, 6, 7}, 144},
    {8, {4, 6, 8}, 432}, {8, {4, 7, 8}, 864},  {8, {5, 6, 7}, 288},  {8, {5, 6, 8}, 864},  {8, {5, 7, 8}, 1728},
    {8, {6, 7, 8}, 2880},
};

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RouteOptions default_routes() {
  RouteOptions routes;
  routes.oracle.threads = std::max(1u, std::thread::hardware_concurrency());
  return routes;
}

Outcome peak_count_table() {
  Outcome o;
  const auto start = Clock::now();
  const RouteOptions routes = default_routes();
  std::map<int, std::size_t> cells_per_order;
  for (const auto& cell : kPeakCounts) {
    ++cells_per_order[cell.n];
    const PeakSet s(cell.n, cell.set);
    const auto results = count_routes(s, Method::all, routes);
    std::set<Method> seen;
    for (const auto& r : results) {
      if (!r.value) continue;
      seen.insert(r.method);
      if (*r.value != cell.count) {
        std::ostringstream why;
        why << "n=" << cell.n << " S=" << format_set_braced(cell.set) << " " << method_name(r.method) << " gave "
            << *r.value << ", expected " << cell.count;
        o.fail(why.str());
      }
    }
    for (Method m : {Method::oracle, Method::dp, Method::genfunc, Method::paths}) {
      if (!seen.count(m)) o.fail("route " + std::string(method_name(m)) + " missing for n=" + std::to_string(cell.n));
    }
    if (cp_closed_form(s) && !seen.count(Method::closed)) o.fail("closed route missing where applicable");
  }
  // The listed cells must be every feasible set.
  const auto tables = dp_tables(8);
  for (int n = 3; n <= 8; ++n) {
    if (cells_per_order[n] != tables[n - 3].size()) o.fail("order " + std::to_string(n) + " is missing feasible sets");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.passed) o.detail = std::to_string(kPeakCounts.size()) + " cells, all routes exact";
  return o;
}

Outcome completeness() {
  Outcome o;
  const auto start = Clock::now();
  OracleOptions oracle;
  oracle.threads = std::max(1u, std::thread::hardware_concurrency());
  for (int n = 3; n <= 9; ++n) {
    if (oracle_table(n, oracle).total() != factorial(n)) o.fail("oracle total wrong at n=" + std::to_string(n));
  }
  for (const auto& t : dp_tables(14)) {
    if (t.total() != factorial(t.n())) o.fail("dp total wrong at n=" + std::to_string(t.n()));
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.passed) o.detail = "oracle n<=9, dp n<=14";
  return o;
}

Outcome coefficient_triangles() {
  Outcome o;
  using Q = Rational;
  const std::vector<std::vector<Q>> b_rows = {{Q(1, 2)}, {2, Q(1, 2)}, {27, 12, 1}, {768, 486, 96, 3}};
  const std::vector<std::vector<Q>> a_rows = {{Q(1, 2)}, {1, 1}, {9, 12, 3}, {192, 324, 144, 12}};
  const auto b = b_triangle(4);
  const auto a = a_triangle(3);
  for (int k = 1; k <= 4; ++k)
    if (b.row(k) != b_rows[k - 1]) o.fail("b row " + std::to_string(k));
  for (int k = 0; k <= 3; ++k)
    if (a.row(k) != a_rows[k]) o.fail("a row " + std::to_string(k));
  if (o.passed) o.detail = "b rows 1-4, a rows 0-3";
  return o;
}

Outcome polynomial_identities() {
  Outcome o;
  const auto a = a_triangle(10);
  const auto b = b_triangle(10);
  for (int k = 0; k <= 10; ++k) {
    const auto fk = f_polynomial(k);
    const auto fk1 = f_polynomial(k + 1);
    if (fk1(Rational(-1)) != 0) o.fail("f_" + std::to_string(k + 1) + "(-1) != 0");
    const auto rhs =
        Rational((k + 1) * (k + 1) * (k + 2)) * fk - Rational((k + 1) * (k + 2)) * fk.derivative().times_x();
    if (fk1.derivative() != rhs) o.fail("derivative identity fails at k=" + std::to_string(k));
  }
  for (int k = 1; k <= 10; ++k)
    for (int i = 1; i <= k; ++i)
      if (a.at(k, i) != Rational(k * (k + 1)) * b.at(k, i)) o.fail("a/b bridge at " + std::to_string(k));
  if (o.passed) o.detail = "k <= 10";
  return o;
}

Outcome path_weights() {
  Outcome o;
  int compared = 0;
  for (int r = 0; r <= 4; ++r)
    for (int i = 0; i <= 4; ++i)
      for (int k = 0; k <= 4; ++k)
        for (int d = 0; d <= 8; ++d) {
          const int n = r + 2 * k + d;
          ++compared;
          if (w_by_enumeration(i, r, n, k) != w_closed(i, r, n, k)) {
            o.fail("w(" + std::to_string(i) + "," + std::to_string(r) + "," + std::to_string(n) + "," +
                   std::to_string(k) + ")");
          }
        }
  if (o.passed) o.detail = std::to_string(compared) + " grid points";
  return o;
}

Outcome published_listing() {
  Outcome o;
  const std::set<std::string> expected = {"14253", "14352", "24153", "34152", "24351", "34251",
                                          "15243", "15342", "25143", "35142", "25341", "35241"};
  std::set<std::string> got;
  for (const auto& p : enumerate_class(PeakSet(5, {4, 5}))) got.insert(format_permutation(p));
  if (got != expected) o.fail("listing differs (" + std::to_string(got.size()) + " permutations)");
  if (o.passed) o.detail = "12 permutations";
  return o;
}

Outcome feasibility() {
  Outcome o;
  OracleOptions oracle;
  oracle.threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t checked = 0;
  for (int n = 3; n <= 9; ++n) {
    const CountTable t = oracle_table(n, oracle);
    for (SetMask bits = 0; bits < (SetMask{1} << n); ++bits) {
      const auto s = from_mask(bits << 1);
      ++checked;
      if (is_feasible(s, n) != (t.at(bits << 1) > 0)) o.fail("n=" + std::to_string(n) + " S=" + format_set_braced(s));
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " subsets";
  return o;
}

Outcome recurrence_identities() {
  Outcome o;
  OracleOptions opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  std::map<int, CountTable> oracle;
  for (int n = 1; n <= 9; ++n) oracle.emplace(n, oracle_table(n, opts));
  std::map<int, CountTable> dp;
  for (auto& t : dp_tables(12)) dp.emplace(t.n(), std::move(t));
  dp.emplace(1, oracle.at(1));
  dp.emplace(2, oracle.at(2));
  for (auto* tables : {&oracle, &dp}) {
    const char* label = tables == &oracle ? "oracle" : "dp";
    const int top = tables->rbegin()->first;
    for (int n = 4; n <= top; ++n) {
      if (auto why = check_insertion_identity(tables->at(n - 1), tables->at(n))) o.fail(std::string(label) + ": " + *why);
      if (auto why = check_tail_identity(n, *tables)) o.fail(std::string(label) + ": " + *why);
    }
  }
  if (o.passed) o.detail = "oracle n<=9, dp n<=12";
  return o;
}

Outcome scalability() {
  Outcome o;
  std::ostringstream detail;
  for (const auto& [n, set] : std::vector<std::pair<int, std::vector<int>>>{{200, {3, 7}}, {100, {10, 20, 30}}}) {
    const auto start = Clock::now();
    const BigInt value = cp_count(PeakSet(n, set));
    const double elapsed = seconds_since(start);
    if (elapsed >= 1) o.fail("n=" + std::to_string(n) + " took " + std::to_string(elapsed) + " s");
    if (value <= 0) o.fail("n=" + std::to_string(n) + " gave a non-positive count");
    detail << "n=" << n << " " << elapsed << " s (" << value.str().size() << " digits); ";
    const int top = set.back();
    BigInt previous = cp_count(PeakSet(top, set));
    for (int m = top + 1; m <= top + 50; ++m) {
      const BigInt next = cp_count(PeakSet(m, set));
      if (next != 2 * previous) o.fail("doubling fails at n=" + std::to_string(m) + " S=" + format_set_braced(set));
      previous = next;
    }
  }
  if (o.passed) o.detail = detail.str() + "doubling holds";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"peak-count table reproduction", peak_count_table},
      {"completeness (sums equal n!)", completeness},
      {"coefficient triangles", coefficient_triangles},
      {"polynomial identities", polynomial_identities},
      {"path-weight equivalence", path_weights},
      {"CP_5({4,5}) listing", published_listing},
      {"feasibility criterion", feasibility},
      {"recurrence identities", recurrence_identities},
      {"scalability and doubling", scalability},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    failed += !outcome.passed;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  AC" << index << " " << name << ": " << outcome.detail << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
