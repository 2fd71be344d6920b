#include "ladder/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ladder {

std::string Variable::to_text() const {
  return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto [key, exp] : factors_) d += exp;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::pair<std::uint64_t, int>> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return Monomial(std::move(merged));
}

std::string Monomial::to_text() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto [key, exp] : factors_) {
    if (!first) out << '*';
    first = false;
    out << Variable::from_key(key).to_text();
    if (exp > 1) out << '^' << exp;
  }
  return out.str();
}

int tau_compare(const Monomial& a, const Monomial& b) {
  // lexicographic: scan variables from most significant (smallest key); the
  // first variable where the exponents differ decides
  const auto &fa = a.factors(), &fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first < fb[j].first) return 1;   // a has the more significant variable
    if (fb[j].first < fa[i].first) return -1;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

Polynomial Polynomial::constant(const BigInt& c) {
  Polynomial p;
  p.add_term(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const BigInt& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

std::pair<Monomial, BigInt> Polynomial::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || m.is_one()) {
      out << mag;
      if (!m.is_one()) out << '*';
    }
    if (!m.is_one()) out << m.to_text();
  }
  return out.str();
}

}  // namespace ladder
