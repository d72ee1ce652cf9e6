#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cpeak/core.hpp"

namespace cpeak {

using Rational = boost::multiprecision::cpp_rational;

std::string format_rational(const Rational& q);  // "p/q", or "p" when integral

// Closed forms for small peak sets. All return 0 for infeasible sets.

/// 2^{n-1}; throws std::domain_error for n < 3.
BigInt cp_empty(int n);
/// 2^{n-2}(2^{i-2}-1) for 3 <= i <= n; 0 for i <= 2; std::domain_error for i > n.
BigInt cp_single(int n, int i);
/// Two-peak count for i < j <= n; std::domain_error when i >= j or j > n.
BigInt cp_pair(int n, int i, int j);

/// Exact-rational coefficient triangle for the tail-run formulas.
/// Kind::b rows start at k = 1 with entries i = 1..k;
/// Kind::a rows start at k = 0 with entries i = 0..k.
class CoeffTriangle {
 public:
  enum class Kind { b, a };

  CoeffTriangle(Kind kind, std::vector<std::vector<Rational>> rows);

  Kind kind() const { return kind_; }
  int first_k() const { return kind_ == Kind::b ? 1 : 0; }
  int last_k() const { return first_k() + static_cast<int>(rows_.size()) - 1; }
  int first_i() const { return kind_ == Kind::b ? 1 : 0; }

  const std::vector<Rational>& row(int k) const;
  const Rational& at(int k, int i) const;

 private:
  Kind kind_;
  std::vector<std::vector<Rational>> rows_;
};

CoeffTriangle b_triangle(int k_max);
CoeffTriangle a_triangle(int k_max);

enum class TriangleFormat { text, csv, json };
std::string format_triangle(const CoeffTriangle& triangle, TriangleFormat format);

/// cp_n([n-k+1, n]) through the a-coefficients; k = 0 gives 2^{n-1}.
/// The alternating sum is checked to be a non-negative integer.
BigInt cp_tail_run(int n, int k);

/// Same count through the b-coefficients (k >= 1); an independent route.
BigInt cp_tail_run_b(int n, int k);

/// Closed-form value when one applies: |S| <= 2, or S a single run (scaled from
/// its own maximum by doubling). Empty optional otherwise.
std::optional<BigInt> cp_closed_form(const PeakSet& s);

/// Dense polynomial with exact rational coefficients, c[0] + c[1] x + ...
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }  // -1 for zero

  Rational operator()(const Rational& x) const;
  RationalPolynomial derivative() const;
  RationalPolynomial times_x() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);

  bool operator==(const RationalPolynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// f_k(x) = sum_i a_{k,i} x^i.
RationalPolynomial f_polynomial(int k);

}  // namespace cpeak
