#include "monoendo/linalg.hpp"

#include <gmpxx.h>

#include <numeric>
#include <ostream>
#include <utility>

#include "monoendo/error.hpp"

namespace monoendo {

std::int64_t dot(const IntVec& a, const IntVec& b) {
  MONOENDO_CHECK(a.size() == b.size(), "dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  MONOENDO_CHECK(a.size() == b.size(), "dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).denominator() != 1) throw InputError("matrix entry is not an integer");
      r(i, j) = m(i, j).numerator();
    }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c).numerator() != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rat inv = 1 / a(r, c);
    for (int j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).numerator() == 0) continue;
      const Rat f = a(i, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatMat> inverse(const RatMat& m) {
  MONOENDO_CHECK(m.rows() == m.cols(), "inverse: not square");
  const int n = m.rows();
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

int rank_of(const RatMat& m) {
  RatMat a = m;
  return static_cast<int>(rref(a).size());
}

std::optional<RatVec> solve_left(const RatMat& m, const RatVec& b) {
  // x m = b  <=>  m^T x^T = b^T
  const RatMat mt = m.transpose();
  RatMat aug(mt.rows(), mt.cols() + 1);
  for (int i = 0; i < mt.rows(); ++i) {
    for (int j = 0; j < mt.cols(); ++j) aug(i, j) = mt(i, j);
    aug(i, mt.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == mt.cols()) return std::nullopt;
  RatVec x(mt.cols(), Rat(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), mt.cols());
  return x;
}

RatMat kernel(const RatMat& m) {
  RatMat a = m;
  auto piv = rref(a);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    RatVec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  RatMat k(static_cast<int>(basis.size()), m.cols());
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < k.cols(); ++j) k(i, j) = basis[i][j];
  return k;
}

Rat det(RatMat a) {
  MONOENDO_CHECK(a.rows() == a.cols(), "det: not square");
  const int n = a.rows();
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c).numerator() != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (int i = c + 1; i < n; ++i) {
      const Rat f = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::int64_t lcm_denominator(const RatVec& v) {
  std::int64_t l = 1;
  for (const Rat& x : v) l = std::lcm(l, x.denominator());
  return l;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t r0 = mod_floor(a, n), r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) return std::nullopt;
  return mod_floor(s0, n);
}

namespace {

template <class T>
struct SmithT {
  Matrix<T> u, v, d;
};

std::int64_t abs_of(std::int64_t x) { return x < 0 ? -x : x; }
mpz_class abs_of(const mpz_class& x) { return abs(x); }

template <class T>
SmithT<T> smith_impl(const Matrix<T>& a) {
  const int m = a.rows(), n = a.cols();
  SmithT<T> s{Matrix<T>::identity(m), Matrix<T>::identity(n), a};
  Matrix<T>& d = s.d;
  auto swap_rows = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(d(i, k), d(j, k));
    for (int k = 0; k < m; ++k) std::swap(s.u(i, k), s.u(j, k));
  };
  auto swap_cols = [&](int i, int j) {
    for (int k = 0; k < m; ++k) std::swap(d(k, i), d(k, j));
    for (int k = 0; k < n; ++k) std::swap(s.v(k, i), s.v(k, j));
  };
  auto add_row = [&](int dst, int src, const T& f) {  // row dst += f * row src
    for (int k = 0; k < n; ++k) d(dst, k) += f * d(src, k);
    for (int k = 0; k < m; ++k) s.u(dst, k) += f * s.u(src, k);
  };
  auto add_col = [&](int dst, int src, const T& f) {
    for (int k = 0; k < m; ++k) d(k, dst) += f * d(k, src);
    for (int k = 0; k < n; ++k) s.v(k, dst) += f * s.v(k, src);
  };

  for (int t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero entry of the remaining block to (t, t).
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi < 0 || abs_of(d(i, j)) < abs_of(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        add_row(i, t, T(-(d(i, t) / d(t, t))));
        if (d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        add_col(j, t, T(-(d(t, j) / d(t, t))));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition.
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (int k = 0; k < n; ++k) d(t, k) = -d(t, k);
      for (int k = 0; k < m; ++k) s.u(t, k) = -s.u(t, k);
    }
  }
  return s;
}

}  // namespace

Smith smith_normal_form(const IntMat& a) {
  auto s = smith_impl(a);
  return {s.u, s.v, s.d};
}

std::optional<IntVec> solve_mod(const IntMat& a, const IntVec& b, std::int64_t modulus) {
  if (modulus <= 0) throw InputError("modulus must be positive");
  const int m = a.rows(), n = a.cols();
  Matrix<mpz_class> am(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) am(i, j) = static_cast<long>(a(i, j));
  const auto s = smith_impl(am);
  // s.d y = s.u b (mod modulus), u = s.v y
  const mpz_class md = static_cast<long>(modulus);
  std::vector<mpz_class> ub(m), y(n);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) ub[i] += s.u(i, k) * static_cast<long>(b[k]);
  for (int i = 0; i < m; ++i) {
    const mpz_class di = i < n ? s.d(i, i) : mpz_class(0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), md.get_mpz_t());
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), ub[i].get_mpz_t(), g.get_mpz_t());
    if (r != 0) return std::nullopt;
    if (i >= n || di == 0) continue;
    const mpz_class mg = md / g;
    mpz_class inv = 0;
    if (mg != 1) {
      const mpz_class dg = di / g;
      MONOENDO_CHECK(mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), mg.get_mpz_t()) != 0, "no inverse modulo");
    }
    y[i] = (ub[i] / g) * inv;
    mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), mg.get_mpz_t());
  }
  IntVec out(n);
  for (int j = 0; j < n; ++j) {
    mpz_class x = 0;
    for (int k = 0; k < n; ++k) x += s.v(j, k) * y[k];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), md.get_mpz_t());
    out[j] = x.get_si();
  }
  for (int i = 0; i < m; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) acc = mod_floor(acc + mod_floor(a(i, j), modulus) * out[j] % modulus, modulus);
    MONOENDO_CHECK(acc == mod_floor(b[i], modulus), "modular solve produced a wrong solution");
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

}  // namespace monoendo

namespace monoendo {

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    const std::int64_t a = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
    std::int64_t b = 1;
    if (slash != std::string::npos) {
      const std::string den = s.substr(slash + 1);
      b = std::stoll(den, &used);
      if (used != den.size()) throw std::invalid_argument(s);
    }
    if (b <= 0) throw InputError("denominator must be positive in '" + s + "'");
    return Rat(a, b);
  } catch (const std::logic_error&) {
    throw InputError("malformed fraction '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace monoendo
