#pragma once

#include <map>
#include <string>
#include <vector>

#include "cpeak/count_table.hpp"

namespace cpeak {

/// x_S y^e with multilinear x part.
struct Monomial {
  SetMask xs = 0;
  int y = 0;

  bool operator==(const Monomial&) const = default;
};

/// Sorted by (|S|, S lexicographic, y exponent).
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in x_1..x_n, y with integer coefficients. Zero terms are
/// never stored. For the peak polynomial g_n the coefficient of x_S y^{|S|}
/// is cp_n(S).
class PeakPolynomial {
 public:
  using Terms = std::map<Monomial, BigInt, MonomialLess>;

  explicit PeakPolynomial(int n) : n_(n) {}

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }

  BigInt coefficient(SetMask xs, int y) const;
  void add(const Monomial& m, const BigInt& c);

  /// Value at x_i = 1 for all i and y = 1.
  BigInt evaluate_at_ones() const;
  /// Coefficients of y^s after x_i := 1, indexed by s.
  std::vector<BigInt> by_cardinality() const;

  /// Sum of dg/dx_i over all variables present.
  PeakPolynomial sum_partial_x() const;
  PeakPolynomial partial_y() const;

  /// Throws std::logic_error unless every term has y-exponent |S| and a
  /// non-negative coefficient.
  void check_invariants() const;

  CountTable to_count_table() const;

  /// "4 + 2·x_3·y", terms in MonomialLess order.
  std::string to_string() const;

  bool operator==(const PeakPolynomial&) const = default;

 private:
  int n_;
  Terms terms_;
};

struct GenfuncOptions {
  static constexpr int kDefaultLimit = 16;
  int limit = kDefaultLimit;

  /// Defaults, with `limit` overridden by CPEAK_GF_LIMIT when set.
  static GenfuncOptions from_environment();
};

/// g_3 = 4 + 2 x_3 y.
PeakPolynomial gf_initial();

/// g_{n+1} = [2 + (n-1) x_{n+1} y] g_n + 2 x_{n+1} sum_i dg_n/dx_i - 2 x_{n+1} y^2 dg_n/dy.
PeakPolynomial gf_step(const PeakPolynomial& g);

/// g_n by iterating gf_step from g_3.
PeakPolynomial gf_polynomial(int n, const GenfuncOptions& options = {});

/// Coefficient of x_S y^{|S|} in g_n.
BigInt gf_coefficient(const PeakSet& s, const GenfuncOptions& options = {});

}  // namespace cpeak
