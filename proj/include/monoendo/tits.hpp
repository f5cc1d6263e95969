#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoendo/blocks.hpp"
#include "monoendo/char_param.hpp"

namespace monoendo {

// Element t * w-dot of the Tits extension, with t = prod lambda_i(-1) stored as
// a vector in X_* tensor Z/2 (entries 0 or 1).
class TitsElt {
 public:
  TitsElt() = default;
  TitsElt(WeylElt w, IntVec t);

  static TitsElt identity(const DatumPtr& d);
  // Product of the simple lifts along the stored reduced word.
  static TitsElt lift(const WeylElt& w);
  static TitsElt simple(const DatumPtr& d, int i);
  static TitsElt torus(const DatumPtr& d, const IntVec& t);

  const WeylElt& weyl() const { return w_; }
  const IntVec& torus_part() const { return t_; }

  // (w1, t1)(w2, t2) = (w1 w2, t1 + w1 t2 + tau(w1, w2))
  TitsElt operator*(const TitsElt& o) const;
  TitsElt inverse() const;
  bool operator==(const TitsElt& o) const { return w_ == o.w_ && t_ == o.t_; }

 private:
  WeylElt w_;
  IntVec t_;
};

// Reduce a cocharacter mod 2.
IntVec mod2(const IntVec& x);

// tau(u, w) = sum of delta^vee mod 2 over delta > 0 with u^-1 delta < 0 and
// (uw)^-1 delta > 0, so that u-dot w-dot = tau(u, w) (uw)-dot.
IntVec tits_twist(const WeylElt& u, const WeylElt& w);
// The same, by multiplying simple lifts one at a time.
IntVec tits_twist_stepwise(const WeylElt& u, const WeylElt& w);

TitsElt tits_lift(const WeylElt& w);

// c(gamma, beta) = (w-dot^{gamma beta})^-1 w-dot^gamma w-dot^beta, a torus element
// of order <= 2. Lifts are the Tits lifts of the minimal elements, each
// multiplied on the left by the given rebasing torus part when present.
IntVec cocycle_c(const Block& gamma, const Block& beta);
IntVec cocycle_c_rebased(const Block& gamma, const Block& beta, const IntVec& f_gamma, const IntVec& f_beta,
                         const IntVec& f_gamma_beta);

struct LambdaValue {
  Rat value;         // in [0, 1)
  std::string note;  // nonempty when q is even
};

// Logarithm of the character of chi at c(-1) for F_q: ((q-1)/2) chi(c) mod Z.
// Throws InputError when the order of chi does not divide q - 1.
LambdaValue lambda_value(const CharParam& chi, std::int64_t q, const IntVec& c);

// Cap on |Omega_L| for trivialization: MONOENDO_OMEGA_CAP, else 16.
std::size_t default_omega_cap();

// c and lambda on the vertex group Omega_L.
struct TwistingData {
  CharParam chi;
  std::int64_t q = 0;
  OmegaGroup omega;
  std::vector<std::vector<IntVec>> c;     // c[g][b] = c(gamma_g, beta_b)
  std::vector<std::vector<Rat>> lambda;   // lambda[g][b]
  std::vector<IntVec> rebase;             // torus parts used for the lifts (zero by default)
  std::string note;
  std::int64_t denominator() const;       // lcm of the lambda denominators
};

TwistingData twisting_data(const CharParam& chi, std::int64_t q, std::vector<IntVec> rebase = {});

struct Trivialization {
  std::int64_t denominator = 1;  // mu takes values in (1/denominator) Z / Z
  std::vector<Rat> mu;           // mu[a] for omega.reps[a]
};

// mu with lambda(g, b) = mu(g) + mu(b) - mu(gb), searched with denominators
// M and 2M (M = t.denominator()); nullopt when neither works.
std::optional<Trivialization> trivialize_class(const TwistingData& t, std::size_t cap = default_omega_cap());

// sigma(s, s, s) for SL_2 with L of order two. Not computed here.
inline constexpr int kSl2SigmaSign = -1;

}  // namespace monoendo
