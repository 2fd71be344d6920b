#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ladder/bigint.hpp"

namespace ladder {

// The matrix entry x[row,col] as a packed variable key. Smaller key = more
// significant: x[i,j] beats x[l,k] iff i < l, or i = l and j < k.
struct Variable {
  int row = 0;
  int col = 0;
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(row) << 32) | static_cast<std::uint32_t>(col);
  }
  static Variable from_key(std::uint64_t k) {
    return {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)};
  }
  std::string to_text() const;  // "x[i,j]"
};

/*
 * A power product of matrix entries, kept as (variable key, exponent) pairs
 * sorted by key, zero exponents never stored. Comparison is lexicographic in
 * the variable significance above.
 */
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial variable(Variable v) { return Monomial({{v.key(), 1}}); }

  bool is_one() const { return factors_.empty(); }
  int total_degree() const;
  const std::vector<std::pair<std::uint64_t, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;

  std::string to_text() const;  // "x[1,1]*x[2,2]^3", "1" for the empty product

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  explicit Monomial(std::vector<std::pair<std::uint64_t, int>> f) : factors_(std::move(f)) {}
  std::vector<std::pair<std::uint64_t, int>> factors_;
};

// +1 when a is the larger monomial, -1 when b is, 0 on equality.
int tau_compare(const Monomial& a, const Monomial& b);

struct TauGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return tau_compare(a, b) > 0; }
};

/*
 * Sparse multivariate polynomial with exact integer coefficients, stored in
 * decreasing monomial order so the leading term is the first entry. Zero
 * coefficients are removed eagerly; equality is term-map equality.
 */
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, TauGreater>;

  Polynomial() = default;
  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const BigInt& c);
  static Polynomial term(const Monomial& m, const BigInt& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // throws std::invalid_argument on the zero polynomial
  std::pair<Monomial, BigInt> leading_term() const;

  void add_term(const Monomial& m, const BigInt& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;

  // terms in decreasing order, "x[1,4]*x[2,5] - x[1,5]*x[2,4]"; "0" when zero
  std::string to_text() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

}  // namespace ladder
