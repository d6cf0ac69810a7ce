#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tucong/model.hpp"
#include "tucong/numeric.hpp"

namespace tucong {

inline constexpr std::size_t kTuCheckCap = 20;

namespace detail {

// Ghouila-Houri: a {-1,0,1} matrix is TU iff every subset of rows admits a
// +-1 signing whose signed column sums all lie in {-1,0,1}. Searched by DFS
// over signings with a slack-based prune.
inline bool ghouila_houri_rows(const IntMatrix& a) {
  const std::size_t m = a.rows, n = a.cols;
  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = static_cast<int>(a.at(r, c));

  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> sel;
    for (std::size_t r = 0; r < m; ++r)
      if (mask >> r & 1) sel.push_back(r);
    // remaining[k][c] = number of rows sel[k..] with a nonzero in column c
    std::vector<std::vector<int>> remaining(sel.size() + 1, std::vector<int>(n, 0));
    for (std::size_t k = sel.size(); k-- > 0;)
      for (std::size_t c = 0; c < n; ++c)
        remaining[k][c] = remaining[k + 1][c] + (rows[sel[k]][c] != 0 ? 1 : 0);

    std::vector<int> sum(n, 0);
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
      if (k == sel.size()) {
        for (std::size_t c = 0; c < n; ++c)
          if (sum[c] < -1 || sum[c] > 1) return false;
        return true;
      }
      for (int sign : {+1, -1}) {
        bool ok = true;
        for (std::size_t c = 0; c < n; ++c) {
          sum[c] += sign * rows[sel[k]][c];
          if (sum[c] < -1 - remaining[k + 1][c] || sum[c] > 1 + remaining[k + 1][c])
            ok = false;
        }
        if (ok && self(self, k + 1)) return true;
        for (std::size_t c = 0; c < n; ++c) sum[c] -= sign * rows[sel[k]][c];
      }
      return false;
    };
    if (!dfs(dfs, 0)) return false;
  }
  return true;
}

// Integer determinant by fraction-free (Bareiss) elimination.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

} // namespace detail

// Verdict for one matrix; when not TU, `violation` may carry a square
// submatrix with |det| >= 2 (row and column index sets plus its determinant).
struct TuViolation {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Int det;
};

inline bool is_totally_unimodular(const IntMatrix& a) {
  if (std::min(a.rows, a.cols) > kTuCheckCap)
    throw PreconditionError("TU check: matrix exceeds the size cap of 20");
  for (const Int& v : a.data)
    if (v < -1 || v > 1) return false;
  if (a.rows == 0 || a.cols == 0) return true;
  return a.rows <= a.cols ? detail::ghouila_houri_rows(a)
                          : detail::ghouila_houri_rows(a.transposed());
}

// Searches square submatrices of growing order for one with |det| >= 2.
// Bounded by a work budget; nullopt when none found within it (the matrix
// may still be non-TU on entries outside {-1,0,1}, reported separately).
inline std::optional<TuViolation> find_tu_violation(const IntMatrix& a,
                                                    std::size_t budget = 2'000'000) {
  const std::size_t k = std::min(a.rows, a.cols);
  std::size_t work = 0;
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> rows, cols;
    std::optional<TuViolation> found;
    auto cols_rec = [&](auto&& self, std::size_t start) -> bool {
      if (cols.size() == size) {
        if (++work > budget) return true;
        std::vector<std::vector<Int>> sub(size, std::vector<Int>(size));
        for (std::size_t i = 0; i < size; ++i)
          for (std::size_t j = 0; j < size; ++j) sub[i][j] = a.at(rows[i], cols[j]);
        Int d = detail::bareiss_det(sub);
        if (d < -1 || d > 1) {
          found = TuViolation{rows, cols, d};
          return true;
        }
        return false;
      }
      for (std::size_t c = start; c < a.cols; ++c) {
        cols.push_back(c);
        if (self(self, c + 1)) return true;
        cols.pop_back();
      }
      return false;
    };
    auto rows_rec = [&](auto&& self, std::size_t start) -> bool {
      if (rows.size() == size) return cols_rec(cols_rec, 0);
      for (std::size_t r = start; r < a.rows; ++r) {
        rows.push_back(r);
        if (self(self, r + 1)) return true;
        rows.pop_back();
      }
      return false;
    };
    rows_rec(rows_rec, 0);
    if (found) return found;
    if (work > budget) break;
  }
  return std::nullopt;
}

struct InstanceTuReport {
  struct PlayerVerdict {
    bool tu = false;
    bool bounds_integral = true; // bounds are typed integers, so always true
    std::optional<TuViolation> violation;
  };
  std::vector<PlayerVerdict> players;

  bool all_tu() const {
    for (const PlayerVerdict& p : players)
      if (!p.tu) return false;
    return true;
  }
};

// Per-player TU verdict for a TU-kind instance.
inline InstanceTuReport check_instance_tu(const GameInstance& inst) {
  if (inst.kind != StrategyKind::Tu)
    throw PreconditionError("check_instance_tu: instance has no TU systems");
  InstanceTuReport report;
  for (const TUSystem& sys : inst.tu) {
    InstanceTuReport::PlayerVerdict v;
    v.tu = is_totally_unimodular(sys.a);
    if (!v.tu) v.violation = find_tu_violation(sys.a);
    report.players.push_back(std::move(v));
  }
  return report;
}

} // namespace tucong
