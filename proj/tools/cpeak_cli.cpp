// Command-line front end: counting by any route, class listings, full tables,
// coefficient triangles, path weights and the cross-validation suite.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 scale limit.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "cpeak/closed_forms.hpp"
#include "cpeak/core.hpp"
#include "cpeak/oracle.hpp"
#include "cpeak/paths.hpp"
#include "cpeak/recurrences.hpp"
#include "cpeak/table_io.hpp"
#include "cpeak/verify.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;

using namespace cpeak;

int cmd_count(int n, const std::string& set_spec, const std::string& method_spec, const RouteOptions& routes) {
  const Method method = parse_method(method_spec);
  const PeakSet s(n, parse_set(set_spec), /*allow_above_n=*/true);
  const auto results = count_routes(s, method, routes);
  if (method != Method::all) {
    const auto& r = results.front();
    if (!r.value) {
      std::cerr << "error: method '" << method_name(method) << "' does not apply: " << r.note << '\n';
      return kExitUsage;
    }
    std::cout << *r.value << '\n';
    return 0;
  }
  for (const auto& r : results) {
    std::cout << method_name(r.method) << ": ";
    if (r.value) std::cout << *r.value << '\n';
    else std::cout << "n/a (" << r.note << ")\n";
  }
  if (!routes_agree(results)) {
    std::cout << "routes DISAGREE\n";
    return kExitMismatch;
  }
  return 0;
}

int cmd_enumerate(int n, const std::string& set_spec, const RouteOptions& routes) {
  const PeakSet s(n, parse_set(set_spec), /*allow_above_n=*/true);
  const auto perms = enumerate_class(s, routes.oracle);
  for (const auto& p : perms) std::cout << format_permutation(p) << '\n';
  std::cout << "# " << perms.size() << " permutations with peak set " << format_set_braced(s.elements()) << '\n';
  return 0;
}

int cmd_table(int n, const std::string& format, const RouteOptions& routes) {
  const TableFormat f = parse_table_format(format);
  const auto tables = dp_tables(n, routes.dp);
  std::cout << format_count_table(tables.back(), f);
  return 0;
}

int cmd_coeffs(const std::string& kind, int k, const std::string& format) {
  TriangleFormat f;
  if (format == "text") f = TriangleFormat::text;
  else if (format == "csv") f = TriangleFormat::csv;
  else if (format == "json") f = TriangleFormat::json;
  else throw std::invalid_argument("unknown format '" + format + "'");
  if (kind == "b") std::cout << format_triangle(b_triangle(k), f);
  else if (kind == "a") std::cout << format_triangle(a_triangle(k), f);
  else throw std::invalid_argument("kind must be 'a' or 'b'");
  return 0;
}

int cmd_paths(int shift, int r, int n, int k, bool list) {
  if (list) {
    for (const auto& path : enumerate_paths(r, n, k)) {
      const auto weights = step_weights(shift, path);
      std::cout << (path.steps.empty() ? std::string("(empty)") : path.word()) << "  weights";
      BigInt running = 1;
      std::string products;
      for (const auto& w : weights) {
        running *= w;
        std::cout << ' ' << w;
        products += ' ' + running.str();
      }
      std::cout << "  running" << (products.empty() ? " 1" : products) << '\n';
    }
  }
  const BigInt enumerated = w_by_enumeration(shift, r, n, k);
  const BigInt closed = w_closed(shift, r, n, k);
  const std::string label =
      "w(" + std::to_string(shift) + "," + std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
  std::cout << label << " enumeration: " << enumerated << '\n';
  std::cout << label << " closed: " << closed << '\n';
  return enumerated == closed ? 0 : kExitMismatch;
}

int cmd_verify(int max_n, const std::string& fixture, RouteOptions routes) {
  VerifyOptions options;
  options.max_n = max_n;
  options.routes = routes;
  if (!fixture.empty()) {
    std::ifstream in(fixture);
    if (!in) throw std::invalid_argument("cannot open fixture '" + fixture + "'");
    options.golden = parse_table_csv(in);
  }
  const auto results = run_verification(options);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << '\n';
    failed += r.passed ? 0 : 1;
  }
  std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of permutations by circular peak set"};
  app.require_subcommand(1);

  RouteOptions routes = RouteOptions::from_environment();
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "Worker threads for exhaustive enumeration")->check(CLI::Range(1u, 1024u));

  int n = 0;
  std::string set_spec;
  std::string method = "paths";
  auto* count = app.add_subcommand("count", "Count permutations of [n] with peak set S");
  count->add_option("--n", n, "Order")->required();
  count->add_option("--set", set_spec, "Comma-separated peak set; empty for none");
  count->add_option("--method", method, "oracle | closed | dp | genfunc | paths | all");

  auto* enumerate = app.add_subcommand("enumerate", "List permutations with peak set S");
  enumerate->add_option("--n", n, "Order")->required();
  enumerate->add_option("--set", set_spec, "Comma-separated peak set; empty for none");

  std::string format = "text";
  auto* table = app.add_subcommand("table", "Every non-zero cp_n(S) at one order");
  table->add_option("--n", n, "Order")->required();
  table->add_option("--format", format, "text | csv | json");

  std::string kind = "b";
  int k = 4;
  auto* coeffs = app.add_subcommand("coeffs", "Tail-run coefficient triangles");
  coeffs->add_option("--kind", kind, "a | b");
  coeffs->add_option("--k", k, "Last row");
  coeffs->add_option("--format", format, "text | csv | json");

  int shift = 0, r = 0;
  bool list = false;
  auto* paths = app.add_subcommand("paths", "Weighted lattice path sums w(i, r, n, k)");
  paths->add_option("--i", shift, "Weight shift")->required();
  paths->add_option("--r", r, "Start column")->required();
  paths->add_option("--n", n, "End column")->required();
  paths->add_option("--k", k, "End height")->required();
  paths->add_flag("--list", list, "Print every path with its step weights");

  int max_n = 8;
  std::string fixture;
  auto* verify = app.add_subcommand("verify", "Cross-validate every route");
  verify->add_option("--max-n", max_n, "Largest order to check");
  verify->add_option("--fixture", fixture, "Golden n,S,count CSV (defaults to the built-in table)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  routes.oracle.threads = threads;

  try {
    if (*count) return cmd_count(n, set_spec, method, routes);
    if (*enumerate) return cmd_enumerate(n, set_spec, routes);
    if (*table) return cmd_table(n, format, routes);
    if (*coeffs) return cmd_coeffs(kind, k, format);
    if (*paths) return cmd_paths(shift, r, n, k, list);
    if (*verify) return cmd_verify(max_n, fixture, routes);
  } catch (const ScaleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitScale;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
