#include "cpeak/closed_forms.hpp"

#include <algorithm>
#include <sstream>

namespace cpeak {

namespace {

BigInt ipow(long base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

BigInt require_natural(const Rational& q, const char* what) {
  if (denominator(q) != 1 || q < 0) {
    throw std::logic_error(std::string(what) + " produced a non-natural value " + format_rational(q));
  }
  return numerator(q);
}

}  // namespace

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BigInt cp_empty(int n) {
  if (n < 3) throw std::domain_error("cp_empty requires n >= 3");
  return pow2(n - 1);
}

BigInt cp_single(int n, int i) {
  if (n < 3) throw std::domain_error("cp_single requires n >= 3");
  if (i > n) throw std::domain_error("cp_single requires i <= n");
  if (i <= 2) return 0;
  return pow2(n - 2) * (pow2(i - 2) - 1);
}

BigInt cp_pair(int n, int i, int j) {
  if (n < 3) throw std::domain_error("cp_pair requires n >= 3");
  if (i >= j) throw std::domain_error("cp_pair requires i < j");
  if (j > n) throw std::domain_error("cp_pair requires j <= n");
  if (i < 3) return 0;

  BigInt first = pow2(n - 3) * (pow2(i - 2) - 1) * (pow2(j - i - 1) - 1);
  // 3(3^{i-2} - 2^{i-1} + 1) vanishes at i = 3, the only case with a
  // negative power of two (n = j = 4).
  BigInt factor = 3 * (ipow(3, i - 2) - pow2(i - 1) + 1);
  const int e = n + j - i - 5;
  BigInt second;
  if (e >= 0) {
    second = factor * pow2(e);
  } else {
    const BigInt divisor = pow2(-e);
    if (factor % divisor != 0) throw std::logic_error("cp_pair: non-integral second term");
    second = factor / divisor;
  }
  return first + second;
}

CoeffTriangle::CoeffTriangle(Kind kind, std::vector<std::vector<Rational>> rows)
    : kind_(kind), rows_(std::move(rows)) {}

const std::vector<Rational>& CoeffTriangle::row(int k) const {
  if (k < first_k() || k > last_k()) throw std::out_of_range("triangle row out of range");
  return rows_[k - first_k()];
}

const Rational& CoeffTriangle::at(int k, int i) const {
  const auto& r = row(k);
  if (i < first_i() || i > k) throw std::out_of_range("triangle column out of range");
  return r[i - first_i()];
}

CoeffTriangle b_triangle(int k_max) {
  if (k_max < 1) throw std::domain_error("b triangle needs k_max >= 1");
  std::vector<std::vector<Rational>> rows;
  rows.push_back({Rational(1, 2)});
  for (int k = 1; k < k_max; ++k) {
    const auto& prev = rows.back();  // row k, entries i = 1..k
    std::vector<Rational> next(k + 1);
    Rational alternating = 0;
    for (int j = 1; j <= k; ++j) alternating += (j % 2 == 1 ? 1 : -1) * prev[j - 1];
    next[0] = Rational(k) * (k + 1) * (k + 1) * alternating;
    for (int i = 2; i <= k + 1; ++i) {
      next[i - 1] = Rational(k * (k + 1) * (k + 2 - i), i) * prev[i - 2];
    }
    rows.push_back(std::move(next));
  }
  return CoeffTriangle(CoeffTriangle::Kind::b, std::move(rows));
}

CoeffTriangle a_triangle(int k_max) {
  if (k_max < 0) throw std::domain_error("a triangle needs k_max >= 0");
  std::vector<std::vector<Rational>> rows;
  rows.push_back({Rational(1, 2)});
  for (int k = 0; k < k_max; ++k) {
    const auto& prev = rows.back();  // row k, entries i = 0..k
    std::vector<Rational> next(k + 2);
    for (int i = 1; i <= k + 1; ++i) {
      next[i] = Rational((k + 1) * (k + 2) * (k + 2 - i), i) * prev[i - 1];
    }
    Rational alternating = 0;
    for (int j = 1; j <= k + 1; ++j) alternating += (j % 2 == 1 ? 1 : -1) * next[j];
    next[0] = alternating;
    rows.push_back(std::move(next));
  }
  return CoeffTriangle(CoeffTriangle::Kind::a, std::move(rows));
}

std::string format_triangle(const CoeffTriangle& triangle, TriangleFormat format) {
  std::ostringstream out;
  const char kind = triangle.kind() == CoeffTriangle::Kind::b ? 'b' : 'a';
  switch (format) {
    case TriangleFormat::text: {
      std::size_t width = 1;
      for (int k = triangle.first_k(); k <= triangle.last_k(); ++k) {
        for (const auto& q : triangle.row(k)) width = std::max(width, format_rational(q).size());
      }
      out << "k\\i";
      for (int i = triangle.first_i(); i <= triangle.last_k(); ++i) {
        out << ' ' << std::string(width - std::to_string(i).size(), ' ') << i;
      }
      out << '\n';
      for (int k = triangle.first_k(); k <= triangle.last_k(); ++k) {
        const std::string label = std::to_string(k);
        out << label << std::string(3 - std::min<std::size_t>(3, label.size()), ' ');
        for (const auto& q : triangle.row(k)) {
          const std::string s = format_rational(q);
          out << ' ' << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
      }
      break;
    }
    case TriangleFormat::csv:
      out << "kind,k,i,value\n";
      for (int k = triangle.first_k(); k <= triangle.last_k(); ++k) {
        for (int i = triangle.first_i(); i <= k; ++i) {
          out << kind << ',' << k << ',' << i << ',' << format_rational(triangle.at(k, i)) << '\n';
        }
      }
      break;
    case TriangleFormat::json: {
      out << "{\"kind\": \"" << kind << "\", \"entries\": {";
      bool first = true;
      for (int k = triangle.first_k(); k <= triangle.last_k(); ++k) {
        for (int i = triangle.first_i(); i <= k; ++i) {
          out << (first ? "" : ", ") << '"' << k << ',' << i << "\": \"" << format_rational(triangle.at(k, i))
              << '"';
          first = false;
        }
      }
      out << "}}\n";
      break;
    }
  }
  return out.str();
}

BigInt cp_tail_run(int n, int k) {
  if (n < 3) throw std::domain_error("cp_tail_run requires n >= 3");
  if (k < 0) throw std::domain_error("cp_tail_run requires k >= 0");
  if (n < 2 * k + 1) return 0;
  const CoeffTriangle a = a_triangle(k);
  Rational sum = 0;
  for (int i = 0; i <= k; ++i) {
    const Rational term = a.at(k, i) * Rational(ipow(2 * k + 2 - 2 * i, n - 2 * k));
    sum += (i % 2 == 0) ? term : -term;
  }
  return require_natural(sum, "cp_tail_run");
}

BigInt cp_tail_run_b(int n, int k) {
  if (n < 3) throw std::domain_error("cp_tail_run_b requires n >= 3");
  if (k < 1) throw std::domain_error("cp_tail_run_b requires k >= 1");
  if (n < 2 * k) return 0;
  const CoeffTriangle b = b_triangle(k);
  const BigInt top = ipow(2 * k + 2, n - 2 * k);
  Rational sum = 0;
  for (int i = 1; i <= k; ++i) {
    const Rational term = b.at(k, i) * Rational(top - ipow(2 * k + 2 - 2 * i, n - 2 * k));
    sum += (i % 2 == 1) ? term : -term;
  }
  return require_natural(Rational(k * (k + 1)) * sum, "cp_tail_run_b");
}

std::optional<BigInt> cp_closed_form(const PeakSet& s) {
  if (s.n() < 3) throw std::domain_error("closed forms require n >= 3");
  if (s.max() > s.n()) return BigInt(0);
  const auto& e = s.elements();
  switch (e.size()) {
    case 0: return cp_empty(s.n());
    case 1: return cp_single(s.n(), e[0]);
    case 2: return cp_pair(s.n(), e[0], e[1]);
    default: break;
  }
  const auto runs = run_decomposition(e).runs;
  if (runs.size() != 1) return std::nullopt;
  if (runs[0].max < 3) return BigInt(0);
  return pow2(s.n() - runs[0].max) * cp_tail_run(runs[0].max, runs[0].length);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) out.push_back(Rational(static_cast<long>(i)) * coefficients_[i]);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::times_x() const {
  if (coefficients_.empty()) return {};
  std::vector<Rational> out(coefficients_.size() + 1);
  std::copy(coefficients_.begin(), coefficients_.end(), out.begin() + 1);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] += b.coefficients_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + Rational(-1) * b;
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
  std::vector<Rational> out = p.coefficients_;
  for (auto& c : out) c *= s;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial f_polynomial(int k) {
  if (k < 0) throw std::domain_error("f_polynomial requires k >= 0");
  return RationalPolynomial(a_triangle(k).row(k));
}

}  // namespace cpeak
