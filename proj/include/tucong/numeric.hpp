#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tucong/errors.hpp"

namespace tucong {

// Arbitrary-precision integer and rational. Rationals are kept in lowest
// terms with positive denominator by the backend; zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

inline bool is_integral(const RatVec& v) {
  for (const Rat& r : v)
    if (!is_integral(r)) return false;
  return true;
}

// Renders "p/q", or just "p" when the value is integral.
inline std::string to_string(const Rat& r) {
  if (is_integral(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::string to_string(const Int& v) { return v.str(); }

// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  IntMatrix(std::size_t r, std::size_t c, std::vector<Int> d)
      : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols)
      throw PreconditionError("matrix storage does not match dimensions");
  }

  Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

inline IntVec mat_vec(const IntMatrix& a, const IntVec& x) {
  if (x.size() != a.cols) throw PreconditionError("mat_vec: dimension mismatch");
  IntVec y(a.rows);
  for (std::size_t r = 0; r < a.rows; ++r) {
    Int s = 0;
    for (std::size_t c = 0; c < a.cols; ++c) s += a.at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

// Rank of a rational matrix (rows given as RatVec), by Gaussian elimination.
inline std::size_t rat_rank(std::vector<RatVec> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

} // namespace tucong
