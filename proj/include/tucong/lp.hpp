#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tucong/numeric.hpp"

namespace tucong {

// One-sided bound with an explicit presence flag; no sentinel values.
struct Bound {
  bool finite = false;
  Int value = 0;

  static Bound none() { return Bound{}; }
  static Bound at(Int v) { return Bound{true, std::move(v)}; }

  friend bool operator==(const Bound& a, const Bound& b) {
    return a.finite == b.finite && (!a.finite || a.value == b.value);
  }
};

// min c^T x  s.t.  row_lo <= Ax <= row_hi,  var_lo <= x <= var_hi.
// Variable bounds are finite integers; row bounds may be absent on either side.
struct LinearProgram {
  RatVec objective;            // size n
  IntMatrix constraints;       // m x n
  std::vector<Bound> row_lo;   // size m
  std::vector<Bound> row_hi;   // size m
  IntVec var_lo;               // size n
  IntVec var_hi;               // size n

  std::size_t num_vars() const { return constraints.cols; }
  std::size_t num_rows() const { return constraints.rows; }

  void validate() const {
    const std::size_t n = constraints.cols, m = constraints.rows;
    if (objective.size() != n || var_lo.size() != n || var_hi.size() != n ||
        row_lo.size() != m || row_hi.size() != m)
      throw PreconditionError("linear program: inconsistent dimensions");
    for (std::size_t j = 0; j < n; ++j)
      if (var_lo[j] > var_hi[j])
        throw PreconditionError("linear program: variable lower bound above upper");
    for (std::size_t i = 0; i < m; ++i)
      if (row_lo[i].finite && row_hi[i].finite && row_lo[i].value > row_hi[i].value)
        throw PreconditionError("linear program: row lower bound above upper");
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  RatVec solution;      // structural variables, at a vertex, when Optimal
  Rat objective_value = 0;
};

namespace detail {

// Bounded-variable primal simplex over exact rationals, Bland's rule
// throughout (lowest-index entering and leaving), two-phase.
class Simplex {
public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {
    lp.validate();
    n_ = lp.num_vars();
    m_ = lp.num_rows();
    total_ = n_ + 2 * m_; // structural, slack, artificial
    build();
  }

  // Phase one; returns false on infeasibility.
  bool phase1() {
    cost_.assign(total_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) cost_[art(i)] = 1;
    run();
    if (current_objective() != 0) return false;
    // Pin the artificials at zero for phase two.
    for (std::size_t i = 0; i < m_; ++i) {
      lo_[art(i)] = Bound::at(0);
      hi_[art(i)] = Bound::at(0);
      if (status_[art(i)] != VarStatus::Basic) {
        status_[art(i)] = VarStatus::AtLower;
        val_[art(i)] = 0;
      }
    }
    return true;
  }

  // Phase two with the real objective; returns false on unboundedness.
  bool phase2() {
    cost_.assign(total_, Rat(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = lp_.objective[j];
    return run();
  }

  RatVec structural_solution() const {
    RatVec x(n_);
    std::vector<Rat> full = full_values();
    for (std::size_t j = 0; j < n_; ++j) x[j] = full[j];
    return x;
  }

  Rat current_objective() const {
    std::vector<Rat> full = full_values();
    Rat v = 0;
    for (std::size_t j = 0; j < total_; ++j) v += cost_[j] * full[j];
    return v;
  }

private:
  enum class VarStatus { Basic, AtLower, AtUpper };

  std::size_t slack(std::size_t i) const { return n_ + i; }
  std::size_t art(std::size_t i) const { return n_ + m_ + i; }

  void build() {
    // Equality system: A x - s + sigma a = 0, with s the row activities.
    col_.assign(m_, std::vector<Rat>(total_, Rat(0)));
    lo_.assign(total_, Bound::none());
    hi_.assign(total_, Bound::none());
    val_.assign(total_, Rat(0));
    status_.assign(total_, VarStatus::AtLower);

    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) col_[i][j] = Rat(lp_.constraints.at(i, j));
    for (std::size_t j = 0; j < n_; ++j) {
      lo_[j] = Bound::at(lp_.var_lo[j]);
      hi_[j] = Bound::at(lp_.var_hi[j]);
      val_[j] = Rat(lp_.var_lo[j]);
      status_[j] = VarStatus::AtLower;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      col_[i][slack(i)] = -1;
      lo_[slack(i)] = lp_.row_lo[i];
      hi_[slack(i)] = lp_.row_hi[i];
      if (lp_.row_lo[i].finite) {
        val_[slack(i)] = Rat(lp_.row_lo[i].value);
        status_[slack(i)] = VarStatus::AtLower;
      } else if (lp_.row_hi[i].finite) {
        val_[slack(i)] = Rat(lp_.row_hi[i].value);
        status_[slack(i)] = VarStatus::AtUpper;
      } else {
        // Rows with no finite bound are stripped before construction.
        throw InternalInvariantError("simplex: unconstrained row not stripped");
      }
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rat resid = 0;
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (status_[j] != VarStatus::Basic) resid -= col_[i][j] * val_[j];
      Rat sigma = (resid >= 0) ? Rat(1) : Rat(-1);
      col_[i][art(i)] = sigma;
      lo_[art(i)] = Bound::at(0);
      hi_[art(i)] = Bound::none();
      basis_[i] = art(i);
      status_[art(i)] = VarStatus::Basic;
      if (sigma == -1)
        for (std::size_t j = 0; j < total_; ++j) col_[i][j] = -col_[i][j];
    }
  }

  std::vector<Rat> basic_values() const {
    std::vector<Rat> beta(m_, Rat(0));
    for (std::size_t j = 0; j < total_; ++j) {
      if (status_[j] == VarStatus::Basic || val_[j] == 0) continue;
      for (std::size_t i = 0; i < m_; ++i)
        if (col_[i][j] != 0) beta[i] -= col_[i][j] * val_[j];
    }
    return beta;
  }

  std::vector<Rat> full_values() const {
    std::vector<Rat> full = val_;
    std::vector<Rat> beta = basic_values();
    for (std::size_t i = 0; i < m_; ++i) full[basis_[i]] = beta[i];
    return full;
  }

  // Returns false only on unboundedness.
  bool run() {
    for (;;) {
      std::vector<Rat> beta = basic_values();
      // Reduced costs d_j = c_j - c_B^T col_j.
      std::optional<std::size_t> entering;
      int dir = 0;
      for (std::size_t j = 0; j < total_; ++j) {
        if (status_[j] == VarStatus::Basic) continue;
        if (lo_[j].finite && hi_[j].finite && lo_[j].value == hi_[j].value) continue;
        Rat d = cost_[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (col_[i][j] != 0) d -= cost_[basis_[i]] * col_[i][j];
        if (status_[j] == VarStatus::AtLower && d < 0) {
          entering = j;
          dir = +1;
          break;
        }
        if (status_[j] == VarStatus::AtUpper && d > 0) {
          entering = j;
          dir = -1;
          break;
        }
      }
      if (!entering) return true; // optimal for the current cost

      const std::size_t j = *entering;
      // Ratio test: x_j moves by dir*t, basics move by -dir*t*col[:,j].
      bool has_limit = false;
      Rat best_t = 0;
      std::size_t leaving_row = 0;
      bool leave_is_entering = false;
      // Entering variable's own opposite bound.
      if (dir > 0 && hi_[j].finite) {
        best_t = Rat(hi_[j].value) - val_[j];
        has_limit = true;
        leave_is_entering = true;
      } else if (dir < 0 && lo_[j].finite) {
        best_t = val_[j] - Rat(lo_[j].value);
        has_limit = true;
        leave_is_entering = true;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (col_[i][j] == 0) continue;
        Rat delta = -Rat(dir) * col_[i][j]; // basic i moves by delta * t
        const std::size_t bv = basis_[i];
        std::optional<Rat> t;
        if (delta > 0 && hi_[bv].finite)
          t = (Rat(hi_[bv].value) - beta[i]) / delta;
        else if (delta < 0 && lo_[bv].finite)
          t = (beta[i] - Rat(lo_[bv].value)) / (-delta);
        if (!t) continue;
        if (!has_limit || *t < best_t ||
            (*t == best_t && !leave_is_entering && bv < basis_[leaving_row]) ||
            (*t == best_t && leave_is_entering && bv < j)) {
          has_limit = true;
          best_t = *t;
          leaving_row = i;
          leave_is_entering = false;
        }
      }
      if (!has_limit) return false; // unbounded ray

      if (leave_is_entering) {
        // Bound flip, no basis change.
        val_[j] += Rat(dir) * best_t;
        status_[j] = (dir > 0) ? VarStatus::AtUpper : VarStatus::AtLower;
        continue;
      }

      // Pivot: variable j enters, basis_[leaving_row] leaves at the bound
      // it hit.
      const std::size_t leaving = basis_[leaving_row];
      Rat leave_val = beta[leaving_row] -
                      Rat(dir) * col_[leaving_row][j] * best_t;
      if (lo_[leaving].finite && leave_val == Rat(lo_[leaving].value))
        status_[leaving] = VarStatus::AtLower;
      else
        status_[leaving] = VarStatus::AtUpper;
      val_[leaving] = leave_val;

      Rat piv = col_[leaving_row][j];
      for (std::size_t c = 0; c < total_; ++c) col_[leaving_row][c] /= piv;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == leaving_row || col_[i][j] == 0) continue;
        Rat f = col_[i][j];
        for (std::size_t c = 0; c < total_; ++c)
          col_[i][c] -= f * col_[leaving_row][c];
      }
      basis_[leaving_row] = j;
      status_[j] = VarStatus::Basic;
    }
  }

  const LinearProgram& lp_;
  std::size_t n_ = 0, m_ = 0, total_ = 0;
  std::vector<std::vector<Rat>> col_; // current tableau, m_ x total_
  std::vector<Bound> lo_, hi_;
  std::vector<Rat> val_;              // nonbasic values
  std::vector<VarStatus> status_;
  std::vector<std::size_t> basis_;
  std::vector<Rat> cost_;
};

// Drops rows with no finite bound; they constrain nothing.
inline LinearProgram strip_unconstrained_rows(const LinearProgram& lp) {
  lp.validate();
  bool any = false;
  for (std::size_t i = 0; i < lp.num_rows(); ++i)
    if (!lp.row_lo[i].finite && !lp.row_hi[i].finite) any = true;
  if (!any) return lp;
  LinearProgram out;
  out.objective = lp.objective;
  out.var_lo = lp.var_lo;
  out.var_hi = lp.var_hi;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < lp.num_rows(); ++i)
    if (lp.row_lo[i].finite || lp.row_hi[i].finite) keep.push_back(i);
  out.constraints = IntMatrix(keep.size(), lp.num_vars());
  out.row_lo.resize(keep.size());
  out.row_hi.resize(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (std::size_t j = 0; j < lp.num_vars(); ++j)
      out.constraints.at(k, j) = lp.constraints.at(keep[k], j);
    out.row_lo[k] = lp.row_lo[keep[k]];
    out.row_hi[k] = lp.row_hi[keep[k]];
  }
  return out;
}

} // namespace detail

inline LpOutcome solve_lp(const LinearProgram& lp0) {
  const LinearProgram lp = detail::strip_unconstrained_rows(lp0);
  detail::Simplex s(lp);
  if (!s.phase1()) return LpOutcome{LpStatus::Infeasible, {}, 0};
  if (!s.phase2()) return LpOutcome{LpStatus::Unbounded, {}, 0};
  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.solution = s.structural_solution();
  out.objective_value = s.current_objective();
  return out;
}

// Feasibility only (phase one); the objective is ignored and a vertex of the
// region is returned.
inline LpOutcome find_vertex(const LinearProgram& lp0) {
  const LinearProgram lp = detail::strip_unconstrained_rows(lp0);
  detail::Simplex s(lp);
  if (!s.phase1()) return LpOutcome{LpStatus::Infeasible, {}, 0};
  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.solution = s.structural_solution();
  out.objective_value = 0;
  return out;
}

} // namespace tucong
