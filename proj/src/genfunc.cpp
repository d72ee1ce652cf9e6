#include "cpeak/genfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cpeak {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.xs != b.xs) return table_order_less(a.xs, b.xs);
  return a.y < b.y;
}

BigInt PeakPolynomial::coefficient(SetMask xs, int y) const {
  auto it = terms_.find(Monomial{xs, y});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void PeakPolynomial::add(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  BigInt& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
}

BigInt PeakPolynomial::evaluate_at_ones() const {
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

std::vector<BigInt> PeakPolynomial::by_cardinality() const {
  std::vector<BigInt> out;
  for (const auto& [m, c] : terms_) {
    if (m.y >= static_cast<int>(out.size())) out.resize(m.y + 1);
    out[m.y] += c;
  }
  return out;
}

PeakPolynomial PeakPolynomial::sum_partial_x() const {
  PeakPolynomial out(n_);
  for (const auto& [m, c] : terms_) {
    for (SetMask rest = m.xs; rest != 0; rest &= rest - 1) {
      const SetMask xi = rest & (~rest + 1);
      out.add(Monomial{m.xs & ~xi, m.y}, c);
    }
  }
  return out;
}

PeakPolynomial PeakPolynomial::partial_y() const {
  PeakPolynomial out(n_);
  for (const auto& [m, c] : terms_) {
    if (m.y > 0) out.add(Monomial{m.xs, m.y - 1}, m.y * c);
  }
  return out;
}

void PeakPolynomial::check_invariants() const {
  for (const auto& [m, c] : terms_) {
    if (m.y != mask_size(m.xs)) throw std::logic_error("peak polynomial: y-exponent differs from |S|");
    if (c < 0) throw std::logic_error("peak polynomial: negative coefficient");
  }
}

CountTable PeakPolynomial::to_count_table() const {
  check_invariants();
  CountTable table(n_);
  for (const auto& [m, c] : terms_) table.add(m.xs, c);
  return table;
}

std::string PeakPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    out << magnitude;
    for (int v : from_mask(m.xs)) out << "·x_" << v;
    if (m.y == 1) out << "·y";
    else if (m.y > 1) out << "·y^" << m.y;
  }
  return out.str();
}

GenfuncOptions GenfuncOptions::from_environment() {
  GenfuncOptions options;
  if (const char* env = std::getenv("CPEAK_GF_LIMIT")) {
    try {
      options.limit = std::clamp(std::stoi(env), 3, kMaxMaskValue);
    } catch (const std::exception&) {
    }
  }
  return options;
}

PeakPolynomial gf_initial() {
  PeakPolynomial g(3);
  g.add(Monomial{0, 0}, 4);
  g.add(Monomial{SetMask{1} << 3, 1}, 2);
  return g;
}

PeakPolynomial gf_step(const PeakPolynomial& g) {
  const int n = g.n();
  if (n + 1 > kMaxMaskValue) throw ScaleError("gf_step: order exceeds mask width");
  const SetMask x_next = SetMask{1} << (n + 1);
  PeakPolynomial out(n + 1);

  // [2 + (n-1) x_{n+1} y] g
  for (const auto& [m, c] : g.terms()) {
    out.add(m, 2 * c);
    out.add(Monomial{m.xs | x_next, m.y + 1}, (n - 1) * c);
  }
  // 2 x_{n+1} sum_i dg/dx_i
  const PeakPolynomial dx = g.sum_partial_x();
  for (const auto& [m, c] : dx.terms()) {
    out.add(Monomial{m.xs | x_next, m.y}, 2 * c);
  }
  // -2 x_{n+1} y^2 dg/dy
  const PeakPolynomial dy = g.partial_y();
  for (const auto& [m, c] : dy.terms()) {
    out.add(Monomial{m.xs | x_next, m.y + 2}, -2 * c);
  }
  out.check_invariants();
  return out;
}

PeakPolynomial gf_polynomial(int n, const GenfuncOptions& options) {
  if (n < 3) throw std::domain_error("generating polynomial requires n >= 3");
  const int limit = std::min(options.limit, kMaxMaskValue);
  if (n > limit) {
    throw ScaleError("generating-function scale exceeded: n = " + std::to_string(n) + " > limit " +
                     std::to_string(limit));
  }
  PeakPolynomial g = gf_initial();
  while (g.n() < n) g = gf_step(g);
  return g;
}

BigInt gf_coefficient(const PeakSet& s, const GenfuncOptions& options) {
  const PeakPolynomial g = gf_polynomial(s.n(), options);
  if (s.max() > s.n()) return 0;
  return g.coefficient(s.mask(), s.size());
}

}  // namespace cpeak
