#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace monoendo {

using Rat = boost::rational<std::int64_t>;
using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rat>;

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const std::vector<T>& data() const { return data_; }

  std::vector<T> row(int i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                          data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
  }
  std::vector<T> col(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    std::vector<T> r(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool operator==(const Matrix& o) const = default;
  auto operator<=>(const Matrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Matrix<std::int64_t>;
using RatMat = Matrix<Rat>;

std::int64_t dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);

RatMat to_rat(const IntMat& m);
// Throws InputError when an entry is not integral.
IntMat to_int(const RatMat& m);

std::optional<RatMat> inverse(const RatMat& m);
int rank_of(const RatMat& m);
// Solves x * m = b (row vector); nullopt when inconsistent.
std::optional<RatVec> solve_left(const RatMat& m, const RatVec& b);
// Basis of {x : m x = 0}, as rows.
RatMat kernel(const RatMat& m);
Rat det(RatMat m);

std::int64_t lcm_denominator(const RatVec& v);
// "a" or "a/b" with b > 0; throws InputError.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);
std::int64_t mod_floor(std::int64_t a, std::int64_t n);
// Inverse of a modulo n, or nullopt when gcd(a, n) != 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n);

// Smith normal form: u * a * v = d with u, v unimodular.
struct Smith {
  IntMat u, v, d;
};
Smith smith_normal_form(const IntMat& a);

// Some u with a u = b (mod modulus), entries in [0, modulus); nullopt if none.
std::optional<IntVec> solve_mod(const IntMat& a, const IntVec& b, std::int64_t modulus);

std::ostream& operator<<(std::ostream& os, const IntMat& m);

}  // namespace monoendo
