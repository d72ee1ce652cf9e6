#include "cpeak/verify.hpp"

#include <algorithm>
#include <sstream>

#include "cpeak/closed_forms.hpp"
#include "cpeak/paths.hpp"

namespace cpeak {

Method parse_method(std::string_view name) {
  if (name == "oracle") return Method::oracle;
  if (name == "closed") return Method::closed;
  if (name == "dp") return Method::dp;
  if (name == "genfunc") return Method::genfunc;
  if (name == "paths") return Method::paths;
  if (name == "all") return Method::all;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::oracle: return "oracle";
    case Method::closed: return "closed";
    case Method::dp: return "dp";
    case Method::genfunc: return "genfunc";
    case Method::paths: return "paths";
    case Method::all: return "all";
  }
  return "?";
}

RouteOptions RouteOptions::from_environment() {
  return RouteOptions{OracleOptions::from_environment(), DpOptions::from_environment(),
                      GenfuncOptions::from_environment()};
}

namespace {

RouteResult run_route(const PeakSet& s, Method method, const RouteOptions& options) {
  switch (method) {
    case Method::oracle:
      return {method, oracle_count(s, options.oracle), ""};
    case Method::closed: {
      auto value = cp_closed_form(s);
      if (!value) return {method, std::nullopt, "no closed form for three or more elements in several runs"};
      return {method, std::move(value), ""};
    }
    case Method::dp: {
      if (s.max() > s.n()) return {method, BigInt(0), ""};
      const auto tables = dp_tables(s.n(), options.dp);
      return {method, tables.back().at(s.mask()), ""};
    }
    case Method::genfunc:
      return {method, gf_coefficient(s, options.genfunc), ""};
    case Method::paths:
      return {method, cp_count(s), ""};
    case Method::all:
      break;
  }
  throw std::logic_error("run_route: no single route for 'all'");
}

}  // namespace

std::vector<RouteResult> count_routes(const PeakSet& s, Method method, const RouteOptions& options) {
  if (s.n() < 3) throw std::domain_error("counting routes require n >= 3");
  if (method != Method::all) return {run_route(s, method, options)};
  std::vector<RouteResult> out;
  for (Method m : {Method::oracle, Method::closed, Method::dp, Method::genfunc, Method::paths}) {
    try {
      out.push_back(run_route(s, m, options));
    } catch (const ScaleError& e) {
      out.push_back({m, std::nullopt, std::string("skipped: ") + e.what()});
    }
  }
  return out;
}

bool routes_agree(const std::vector<RouteResult>& results) {
  const BigInt* first = nullptr;
  for (const auto& r : results) {
    if (!r.value) continue;
    if (first == nullptr) first = &*r.value;
    else if (*r.value != *first) return false;
  }
  return first != nullptr;
}

std::optional<std::string> check_insertion_identity(const CountTable& previous, const CountTable& current) {
  const int n = current.n();
  if (previous.n() != n - 1) throw std::invalid_argument("insertion identity needs consecutive orders");
  const SetMask top = SetMask{1} << n;
  for (SetMask s = 0; s < (SetMask{1} << (n - 1)); ++s) {
    const SetMask key = s << 1;  // subsets of [1, n-1]
    const BigInt lhs = current.at(key | top);
    const BigInt rhs = insertion_rhs(previous, key);
    if (lhs != rhs) {
      std::ostringstream msg;
      auto with_top = from_mask(key | top);
      msg << "n=" << n << " S=" << format_set_braced(with_top) << ": table " << lhs << " vs recurrence " << rhs;
      return msg.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_tail_identity(int n, const std::map<int, CountTable>& tables) {
  auto lookup = [&](int order, SetMask key) -> BigInt {
    auto it = tables.find(order);
    if (it == tables.end()) throw std::out_of_range("missing table for order " + std::to_string(order));
    return it->second.at(key);
  };
  for (int k = 0; k + 4 <= n; ++k) {
    const int span = n - k - 3;  // S within [3, n-k-1]
    for (SetMask bits = 0; bits < (SetMask{1} << span); ++bits) {
      const std::vector<int> s = from_mask(bits << 3);
      SetMask target = bits << 3;
      for (int v = n - k + 1; v <= n; ++v) target |= SetMask{1} << v;
      const BigInt lhs = lookup(n, target);
      const BigInt rhs = tail_recurrence_rhs(n, k, s, lookup);
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "n=" << n << " k=" << k << " S=" << format_set_braced(s) << ": table " << lhs << " vs recurrence "
            << rhs;
        return msg.str();
      }
    }
  }
  return std::nullopt;
}

namespace {

class Suite {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  template <typename Fn>
  void run(std::string name, Fn&& fn) {
    try {
      std::string failure = fn();
      const bool passed = failure.empty();
      add(std::move(name), passed, std::move(failure));
    } catch (const std::exception& e) {
      add(std::move(name), false, std::string("exception: ") + e.what());
    }
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string rationals_match(const CoeffTriangle& t, const std::vector<std::vector<Rational>>& expected) {
  for (std::size_t r = 0; r < expected.size(); ++r) {
    const int k = t.first_k() + static_cast<int>(r);
    if (t.row(k) != expected[r]) return "row k=" + std::to_string(k) + " differs";
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Suite suite;
  const int max_n = options.max_n;
  if (max_n < 3) throw std::domain_error("verification requires max_n >= 3");
  const auto& routes = options.routes;
  const int oracle_max = std::min({max_n, routes.oracle.limit, OracleOptions::kHardCap});
  const auto& golden = options.golden ? *options.golden : golden_table();

  std::map<int, CountTable> oracle;
  for (int n = 1; n <= oracle_max; ++n) oracle.emplace(n, oracle_table(n, routes.oracle));
  const auto dp = dp_tables(max_n, routes.dp);
  auto dp_at = [&](int n) -> const CountTable& { return dp[n - 3]; };

  std::map<int, PeakPolynomial> gf;
  {
    PeakPolynomial g = gf_initial();
    gf.emplace(3, g);
    while (g.n() < max_n) {
      g = gf_step(g);
      gf.emplace(g.n(), g);
    }
  }

  // Published table, cell by cell, against every applicable route.
  for (const auto& row : golden) {
    if (row.n > max_n) continue;
    const PeakSet s(row.n, row.set);
    std::ostringstream name;
    name << "published n=" << row.n << " S=" << format_set_braced(row.set) << " = " << row.count;
    suite.run(name.str(), [&]() -> std::string {
      std::vector<std::pair<std::string, BigInt>> values;
      if (auto it = oracle.find(row.n); it != oracle.end()) values.emplace_back("oracle", it->second.at(s.mask()));
      if (auto closed = cp_closed_form(s)) values.emplace_back("closed", *closed);
      values.emplace_back("dp", dp_at(row.n).at(s.mask()));
      values.emplace_back("genfunc", gf.at(row.n).coefficient(s.mask(), s.size()));
      values.emplace_back("paths", cp_count(s));
      for (const auto& [route, value] : values) {
        if (value != row.count) {
          std::ostringstream msg;
          msg << "cell n=" << row.n << " S=" << format_set_braced(row.set) << ": expected " << row.count << ", "
              << route << " gives " << value;
          return msg.str();
        }
      }
      return {};
    });
  }
  suite.run("published table covers every feasible set", [&]() -> std::string {
    for (int n = 3; n <= std::min(max_n, 8); ++n) {
      std::size_t listed = std::count_if(golden.begin(), golden.end(), [&](const TableRow& r) { return r.n == n; });
      if (listed != dp_at(n).size()) {
        return "n=" + std::to_string(n) + ": fixture lists " + std::to_string(listed) + " cells, expected " +
               std::to_string(dp_at(n).size());
      }
    }
    return {};
  });

  for (int n = 3; n <= oracle_max; ++n) {
    suite.run("oracle total n=" + std::to_string(n) + " is n!", [&]() -> std::string {
      return oracle.at(n).total() == factorial(n) ? "" : "total " + oracle.at(n).total().str();
    });
    suite.run("feasibility criterion n=" + std::to_string(n), [&]() -> std::string {
      for (SetMask key = 0; key < (SetMask{1} << n); ++key) {
        const auto s = from_mask(key << 1);
        if (is_feasible(s, n) != (oracle.at(n).at(key << 1) > 0)) return "S=" + format_set_braced(s);
      }
      return {};
    });
    suite.run("dp = oracle n=" + std::to_string(n),
              [&]() -> std::string { return dp_at(n) == oracle.at(n) ? "" : "tables differ"; });
    if (n >= 4) {
      suite.run("insertion recurrence on oracle n=" + std::to_string(n),
                [&]() { return check_insertion_identity(oracle.at(n - 1), oracle.at(n)).value_or(""); });
    }
    if (n >= 4) {
      suite.run("tail recurrence on oracle n=" + std::to_string(n),
                [&]() { return check_tail_identity(n, oracle).value_or(""); });
    }
  }

  std::map<int, CountTable> dp_map;
  for (const auto& t : dp) dp_map.emplace(t.n(), t);
  for (int n = 3; n <= max_n; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    suite.run("dp total" + tag + " is n!",
              [&]() -> std::string { return dp_at(n).total() == factorial(n) ? "" : "total " + dp_at(n).total().str(); });
    suite.run("genfunc = dp" + tag, [&]() -> std::string {
      return gf.at(n).to_count_table() == dp_at(n) ? "" : "coefficients differ";
    });
    suite.run("paths = dp" + tag, [&]() -> std::string {
      for (SetMask key = 0; key < (SetMask{1} << (n - 2)); ++key) {
        const PeakSet s(n, from_mask(key << 3));
        if (cp_count(s) != dp_at(n).at(s.mask())) return "S=" + format_set_braced(s.elements());
      }
      return {};
    });
    if (n >= 4) {
      suite.run("tail recurrence on dp" + tag, [&]() { return check_tail_identity(n, dp_map).value_or(""); });
    }
    if (n >= 4) {
      suite.run("insertion recurrence on dp" + tag,
                [&]() { return check_insertion_identity(dp_at(n - 1), dp_at(n)).value_or(""); });
    }
  }

  suite.run("b triangle rows 1-4", [] {
    return rationals_match(b_triangle(4), {{Rational(1, 2)},
                                           {2, Rational(1, 2)},
                                           {27, 12, 1},
                                           {768, 486, 96, 3}});
  });
  suite.run("a triangle rows 0-3", [] {
    return rationals_match(a_triangle(3), {{Rational(1, 2)}, {1, 1}, {9, 12, 3}, {192, 324, 144, 12}});
  });
  suite.run("f_k identities for k <= 10", []() -> std::string {
    const auto a = a_triangle(11);
    const auto b = b_triangle(10);
    for (int k = 0; k <= 10; ++k) {
      const auto fk = f_polynomial(k), fk1 = f_polynomial(k + 1);
      if (fk1(Rational(-1)) != 0) return "f_" + std::to_string(k + 1) + "(-1) != 0";
      const auto rhs = Rational((k + 1) * (k + 1) * (k + 2)) * fk -
                       Rational((k + 1) * (k + 2)) * fk.derivative().times_x();
      if (fk1.derivative() != rhs) return "derivative identity fails at k=" + std::to_string(k);
      if (k >= 1) {
        Rational alternating = 0;
        for (int i = 1; i <= k; ++i) {
          if (a.at(k, i) != Rational(k * (k + 1)) * b.at(k, i)) return "a/b bridge fails at k=" + std::to_string(k);
          alternating += (i % 2 == 1 ? 1 : -1) * b.at(k, i);
        }
        if (a.at(k, 0) != Rational(k * (k + 1)) * alternating) return "a_{k,0} bridge fails at k=" + std::to_string(k);
      }
    }
    return {};
  });
  suite.run("path weights: enumeration = closed form", []() -> std::string {
    for (int i = 0; i <= 4; ++i)
      for (int k = 0; k <= 4; ++k)
        for (int d = 0; d <= 8; ++d) {
          const int r = 3, n = r + 2 * k + d;
          if (w_by_enumeration(i, r, n, k) != w_closed(i, r, n, k)) {
            return "w(" + std::to_string(i) + "," + std::to_string(r) + "," + std::to_string(n) + "," +
                   std::to_string(k) + ")";
          }
        }
    return {};
  });

  if (oracle_max >= 5) {
    suite.run("CP_5({4,5}) listing", [&]() -> std::string {
      std::vector<std::string> expected = {"14253", "14352", "24153", "34152", "24351", "34251",
                                           "15243", "15342", "25143", "35142", "25341", "35241"};
      std::vector<std::string> got;
      for (const auto& p : enumerate_class(PeakSet(5, {4, 5}), routes.oracle)) got.push_back(format_permutation(p));
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      return got == expected ? "" : "listing differs";
    });
  }

  suite.run("large orders: exact values and doubling law", []() -> std::string {
    for (const auto& elements : {std::vector<int>{3, 7}, std::vector<int>{10, 20, 30}}) {
      const int m = elements.back();
      BigInt previous = cp_count(PeakSet(m, elements));
      for (int n = m + 1; n <= m + 50; ++n) {
        BigInt current = cp_count(PeakSet(n, elements));
        if (current != 2 * previous) return "doubling fails at n=" + std::to_string(n);
        previous = std::move(current);
      }
    }
    return {};
  });

  return suite.take();
}

}  // namespace cpeak
