#include "monoendo/laurent.hpp"

#include <sstream>

#include "monoendo/error.hpp"

namespace monoendo {

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

void LaurentPoly::add_term(int exp, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

mpz_class LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_degree() const {
  MONOENDO_CHECK(!terms_.empty(), "degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  MONOENDO_CHECK(!terms_.empty(), "degree of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(r.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::bar() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    if (e >= 0) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

mpq_class LaurentPoly::evaluate(const mpq_class& v0) const {
  if (v0 == 0) throw InputError("cannot specialize at v = 0");
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class p = 1;
    mpz_class num = v0.get_num(), den = v0.get_den();
    mpz_class pn, pd;
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), a);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), a);
    p = e < 0 ? mpq_class(pd, pn) : mpq_class(pn, pd);
    p.canonicalize();
    sum += c * p;
  }
  return sum;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::pairs() const {
  return {terms_.begin(), terms_.end()};
}

std::string LaurentPoly::to_string(const char* var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace monoendo
