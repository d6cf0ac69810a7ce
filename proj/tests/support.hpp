#pragma once

// Test-only oracles, independent of the solver paths they check:
// brute-force vertex enumeration for LPs, cofactor determinants for the TU
// checker, and small random generators.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "tucong/lp.hpp"
#include "tucong/numeric.hpp"

namespace tsupport {

using tucong::Bound;
using tucong::Int;
using tucong::IntMatrix;
using tucong::LinearProgram;
using tucong::Rat;
using tucong::RatVec;

// Determinant by cofactor expansion along the first row.
inline Int cofactor_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        if (c2 == c) continue;
        minor[r - 1][cc++] = m[r][c2];
      }
    }
    Int term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// True iff every square submatrix has determinant in {-1,0,1}.
inline bool brute_force_tu(const IntMatrix& a) {
  const std::size_t k = std::min(a.rows, a.cols);
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> rows(size), cols(size);
    // enumerate row subsets
    std::vector<bool> rsel(a.rows, false);
    std::fill(rsel.begin(), rsel.begin() + size, true);
    std::sort(rsel.begin(), rsel.end());
    do {
      rows.clear();
      for (std::size_t r = 0; r < a.rows; ++r)
        if (rsel[r]) rows.push_back(r);
      std::vector<bool> csel(a.cols, false);
      std::fill(csel.begin(), csel.begin() + size, true);
      std::sort(csel.begin(), csel.end());
      do {
        cols.clear();
        for (std::size_t c = 0; c < a.cols; ++c)
          if (csel[c]) cols.push_back(c);
        std::vector<std::vector<Int>> sub(size, std::vector<Int>(size));
        for (std::size_t i = 0; i < size; ++i)
          for (std::size_t j = 0; j < size; ++j) sub[i][j] = a.at(rows[i], cols[j]);
        Int d = cofactor_det(sub);
        if (d < -1 || d > 1) return false;
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
  }
  return true;
}

// Solves a square rational system M x = rhs; nullopt when singular.
inline std::optional<RatVec> solve_square(std::vector<RatVec> m, RatVec rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

inline bool lp_point_feasible(const LinearProgram& lp, const RatVec& x) {
  for (std::size_t j = 0; j < lp.num_vars(); ++j)
    if (x[j] < lp.var_lo[j] || x[j] > lp.var_hi[j]) return false;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    Rat act = 0;
    for (std::size_t j = 0; j < lp.num_vars(); ++j)
      act += Rat(lp.constraints.at(i, j)) * x[j];
    if (lp.row_lo[i].finite && act < lp.row_lo[i].value) return false;
    if (lp.row_hi[i].finite && act > lp.row_hi[i].value) return false;
  }
  return true;
}

// All vertices of the LP's feasible region, by enumerating bases of tight
// hyperplanes. Region is bounded (finite variable bounds), so the region is
// nonempty iff some vertex is feasible.
inline std::vector<RatVec> enumerate_vertices(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  struct Plane {
    RatVec normal;
    Rat rhs;
  };
  std::vector<Plane> planes;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    RatVec normal(n);
    for (std::size_t j = 0; j < n; ++j) normal[j] = Rat(lp.constraints.at(i, j));
    if (lp.row_lo[i].finite) planes.push_back({normal, Rat(lp.row_lo[i].value)});
    if (lp.row_hi[i].finite) planes.push_back({normal, Rat(lp.row_hi[i].value)});
  }
  for (std::size_t j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    planes.push_back({e, Rat(lp.var_lo[j])});
    if (lp.var_hi[j] != lp.var_lo[j]) planes.push_back({e, Rat(lp.var_hi[j])});
  }
  std::vector<RatVec> vertices;
  std::vector<std::size_t> idx(n);
  auto record = [&](const RatVec& x) {
    if (!lp_point_feasible(lp, x)) return;
    for (const RatVec& v : vertices)
      if (v == x) return;
    vertices.push_back(x);
  };
  // choose n planes out of planes.size()
  std::vector<std::size_t> comb;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (comb.size() == n) {
      std::vector<RatVec> m;
      RatVec rhs;
      for (std::size_t k : comb) {
        m.push_back(planes[k].normal);
        rhs.push_back(planes[k].rhs);
      }
      if (auto x = solve_square(m, rhs)) record(*x);
      return;
    }
    for (std::size_t k = start; k < planes.size(); ++k) {
      comb.push_back(k);
      self(self, k + 1);
      comb.pop_back();
    }
  };
  if (n == 0) {
    RatVec empty;
    if (lp_point_feasible(lp, empty)) vertices.push_back(empty);
  } else {
    rec(rec, 0);
  }
  return vertices;
}

inline Rat lp_objective_at(const LinearProgram& lp, const RatVec& x) {
  Rat v = 0;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) v += lp.objective[j] * x[j];
  return v;
}

// Brute-force LP optimum: min objective over all feasible vertices.
// nullopt = infeasible.
inline std::optional<Rat> brute_force_lp_min(const LinearProgram& lp) {
  std::vector<RatVec> verts = enumerate_vertices(lp);
  if (verts.empty()) return std::nullopt;
  Rat best = lp_objective_at(lp, verts[0]);
  for (const RatVec& v : verts) best = std::min(best, lp_objective_at(lp, v));
  return best;
}

// Checks that x makes a full-rank set of constraints tight (vertex test).
inline bool is_vertex_of(const LinearProgram& lp, const RatVec& x) {
  if (!lp_point_feasible(lp, x)) return false;
  const std::size_t n = lp.num_vars();
  std::vector<RatVec> tight;
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == lp.var_lo[j] || x[j] == lp.var_hi[j]) {
      RatVec e(n, Rat(0));
      e[j] = 1;
      tight.push_back(e);
    }
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    Rat act = 0;
    RatVec normal(n);
    for (std::size_t j = 0; j < n; ++j) {
      normal[j] = Rat(lp.constraints.at(i, j));
      act += normal[j] * x[j];
    }
    if ((lp.row_lo[i].finite && act == lp.row_lo[i].value) ||
        (lp.row_hi[i].finite && act == lp.row_hi[i].value))
      tight.push_back(normal);
  }
  return tucong::rat_rank(tight) == n;
}

} // namespace tsupport
