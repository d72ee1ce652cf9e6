#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpeak/genfunc.hpp"
#include "cpeak/oracle.hpp"
#include "cpeak/recurrences.hpp"
#include "cpeak/table_io.hpp"

namespace cpeak {

enum class Method { oracle, closed, dp, genfunc, paths, all };

Method parse_method(std::string_view name);
std::string_view method_name(Method method);

struct RouteOptions {
  OracleOptions oracle;
  DpOptions dp;
  GenfuncOptions genfunc;

  static RouteOptions from_environment();
};

/// Outcome of one counting route. `value` is empty when the route does not
/// apply to the set (or exceeds its scale limit under Method::all); `note`
/// then says why.
struct RouteResult {
  Method method;
  std::optional<BigInt> value;
  std::string note;
};

/// Evaluates cp_n(S) by the requested route, or every route for Method::all.
/// A single explicit route propagates ScaleError; Method::all records it as a
/// skipped route instead.
std::vector<RouteResult> count_routes(const PeakSet& s, Method method, const RouteOptions& options);

/// True when at least one route produced a value and all values agree.
bool routes_agree(const std::vector<RouteResult>& results);

// Consistency checks between complete tables. Each returns a description of
// the first violation, or nothing.

/// cp_n(S + {n}) against the insertion recurrence for every S within [1, n-1].
std::optional<std::string> check_insertion_identity(const CountTable& previous, const CountTable& current);

/// The tail-run recurrence at order n for every k >= 0 with n >= k+4 and every
/// S within [3, n-k-1]. `tables` must hold orders n-2, n-1 and n.
std::optional<std::string> check_tail_identity(int n, const std::map<int, CountTable>& tables);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 8;
  RouteOptions routes;
  /// Published values to compare against; the compiled-in fixture when empty.
  std::optional<std::vector<TableRow>> golden;
};

/// Runs the cross-validation suite with every order-dependent phase capped at
/// max_n (oracle phases additionally at the oracle limit).
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace cpeak
