#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace monoendo {

// Element of Z[v, v^-1]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_.emplace(0, mpz_class(c)); }  // NOLINT
  LaurentPoly(const mpz_class& c) { if (c != 0) terms_.emplace(0, c); }  // NOLINT

  static LaurentPoly monomial(int exp, const mpz_class& coeff = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly v_inv() { return monomial(-1); }

  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int exp) const;
  const std::map<int, mpz_class>& terms() const { return terms_; }
  int min_degree() const;  // precondition: nonzero
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    return r *= b;
  }
  LaurentPoly operator-() const;

  // Multiply by v^k.
  LaurentPoly shift(int k) const;
  // v -> v^-1
  LaurentPoly bar() const;
  // v -> v^k (k may be negative)
  LaurentPoly substitute_power(int k) const;
  // Terms of strictly negative degree.
  LaurentPoly negative_part() const;
  mpq_class evaluate(const mpq_class& v0) const;
  bool nonnegative() const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  // Exponent/coefficient pairs in increasing exponent order.
  std::vector<std::pair<int, mpz_class>> pairs() const;
  std::string to_string(const char* var = "v") const;

 private:
  void add_term(int exp, const mpz_class& c);
  std::map<int, mpz_class> terms_;
};

}  // namespace monoendo
