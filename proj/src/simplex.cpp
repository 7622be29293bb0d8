// Copyright 2026 The pmtnsched Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pmtn/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace pmtn::simplex {
namespace {

template <class Real>
constexpr bool kIsDouble = std::is_same_v<Real, double>;

template <class Real>
Real abs_of(const Real& v) {
  return v < 0 ? Real(-v) : v;
}

template <class Real>
double to_double(const Real& v) {
  if constexpr (kIsDouble<Real>) {
    return v;
  } else {
    return v.template convert_to<double>();
  }
}

template <class Real>
class Solver {
 public:
  Solver(const LpProblem& lp, const Options& options);
  Result<Real> run(const Basis* warm_start);

 private:
  struct Tolerances {
    Real primal{}, dual{}, pivot{}, drop{}, step{};
  };

  bool fixed(int j) const { return has_upper_[j] && upper_[j] == lower_[j]; }
  const Real& nonbasic_value(int j) const { return at_upper_[j] ? upper_[j] : lower_[j]; }

  void axpy(const Real& a, const Real* x, Real* y, std::size_t n) const;
  void scale(const Real& a, Real* x, std::size_t n) const;
  Real dot(const Real* x, const Real* y, std::size_t n) const;

  void cold_basis();
  bool install(const Basis& warm);
  bool reinvert();
  Real* column_of_inverse(int c) { return &binv_[static_cast<std::size_t>(c) * m_]; }
  void gather_row(int r);
  void ftran(int column);
  void pivot_inverse(int r);
  void recompute_basics();
  void full_duals();
  void update_duals();
  void refresh();
  Real reduced_cost(int j, bool phase1) const;
  Result<Real> finish(LpStatus status) const;

  const Options& options_;
  const kernels::KernelTable& k_;
  Tolerances tol_;

  int n_ = 0;           // structural columns
  int m_ = 0;           // active rows
  int orig_rows_ = 0;
  int total_ = 0;       // n_ + m_
  bool trivially_infeasible_ = false;
  std::vector<int> orig_of_row_;
  std::vector<int> row_of_orig_;

  std::vector<int> col_start_, col_row_;
  std::vector<Real> col_val_;
  std::vector<Real> sign_;  // logical coefficient per active row
  std::vector<Real> rhs_;
  std::vector<Real> cost_, lower_, upper_;
  std::vector<char> has_upper_;

  std::vector<int> basis_;
  std::vector<int> position_;
  std::vector<char> at_upper_;
  // B^-1, column-major: entry (i, c) lives at binv_[c * m_ + i].
  std::vector<Real> binv_;
  std::vector<Real> xb_, alpha_, y_, cb_, want_, row_;
  bool duals_valid_ = false;
  std::vector<double> score_;
  int since_reinvert_ = 0;
  int iterations_ = 0;
  int bland_switches_ = 0;
};

template <class Real>
void Solver<Real>::axpy(const Real& a, const Real* x, Real* y, std::size_t n) const {
  if constexpr (kIsDouble<Real>) {
    k_.axpy(a, x, y, n);
  } else {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
  }
}

template <class Real>
void Solver<Real>::scale(const Real& a, Real* x, std::size_t n) const {
  if constexpr (kIsDouble<Real>) {
    k_.scale(a, x, n);
  } else {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
  }
}

template <class Real>
Real Solver<Real>::dot(const Real* x, const Real* y, std::size_t n) const {
  if constexpr (kIsDouble<Real>) {
    return k_.dot(x, y, n);
  } else {
    Real s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  }
}

template <class Real>
Solver<Real>::Solver(const LpProblem& lp, const Options& options)
    : options_(options), k_(options.kernels ? *options.kernels : kernels::active()) {
  if constexpr (kIsDouble<Real>) {
    tol_ = {1e-9, 1e-9, 1e-9, 1e-14, 1e-12};
  }
  n_ = lp.num_cols;
  const auto un = static_cast<std::size_t>(n_);
  if (n_ < 0 || lp.cost.size() != un || lp.lower.size() != un || lp.upper.size() != un) {
    throw std::invalid_argument("LpProblem: column data size mismatch");
  }
  orig_rows_ = static_cast<int>(lp.rows.size());
  row_of_orig_.assign(lp.rows.size(), -1);

  std::vector<int> count(un + 1, 0);
  for (int i = 0; i < orig_rows_; ++i) {
    const LpRow& row = lp.rows[i];
    if (row.index.size() != row.value.size()) {
      throw std::invalid_argument("LpProblem: row index/value size mismatch");
    }
    bool empty = true;
    for (std::size_t k = 0; k < row.index.size(); ++k) {
      if (row.index[k] < 0 || row.index[k] >= n_) {
        throw std::invalid_argument("LpProblem: column index out of range");
      }
      if (row.value[k] != 0.0) empty = false;
    }
    if (empty) {
      const bool ok = row.sense == RowSense::kEqual ? row.rhs == 0.0 : row.rhs <= 0.0;
      if (!ok) trivially_infeasible_ = true;
      continue;
    }
    row_of_orig_[i] = m_++;
    orig_of_row_.push_back(i);
    sign_.push_back(row.sense == RowSense::kEqual ? Real(1) : Real(-1));
    rhs_.push_back(Real(row.rhs));
    for (std::size_t k = 0; k < row.index.size(); ++k) {
      if (row.value[k] != 0.0) ++count[row.index[k] + 1];
    }
  }
  total_ = n_ + m_;

  std::partial_sum(count.begin(), count.end(), count.begin());
  col_start_ = count;
  col_row_.resize(count.back());
  col_val_.resize(count.back());
  std::vector<int> fill(count.begin(), count.end() - 1);
  for (int r = 0; r < m_; ++r) {
    const LpRow& row = lp.rows[orig_of_row_[r]];
    for (std::size_t k = 0; k < row.index.size(); ++k) {
      if (row.value[k] == 0.0) continue;
      const int at = fill[row.index[k]]++;
      col_row_[at] = r;
      col_val_[at] = Real(row.value[k]);
    }
  }

  cost_.resize(total_);
  lower_.resize(total_);
  upper_.resize(total_);
  has_upper_.assign(total_, 0);
  for (int j = 0; j < n_; ++j) {
    if (!std::isfinite(lp.lower[j])) {
      throw std::invalid_argument("LpProblem: lower bounds must be finite");
    }
    if (std::isnan(lp.upper[j]) || lp.upper[j] < lp.lower[j]) {
      throw std::invalid_argument("LpProblem: upper bound below lower bound");
    }
    cost_[j] = Real(lp.cost[j]);
    lower_[j] = Real(lp.lower[j]);
    if (std::isfinite(lp.upper[j])) {
      upper_[j] = Real(lp.upper[j]);
      has_upper_[j] = 1;
    }
  }
  for (int r = 0; r < m_; ++r) {
    const int j = n_ + r;
    cost_[j] = 0;
    lower_[j] = 0;
    if (sign_[r] > 0) {  // artificial of an equality row
      upper_[j] = 0;
      has_upper_[j] = 1;
    }
  }

  basis_.resize(m_);
  position_.assign(total_, -1);
  at_upper_.assign(total_, 0);
  xb_.resize(m_);
  binv_.resize(static_cast<std::size_t>(m_) * m_);
  alpha_.resize(m_);
  y_.resize(m_);
  cb_.resize(m_);
  want_.resize(m_);
  row_.resize(m_);
  score_.resize(total_);
}

template <class Real>
void Solver<Real>::cold_basis() {
  std::fill(position_.begin(), position_.end(), -1);
  for (int r = 0; r < m_; ++r) {
    basis_[r] = n_ + r;
    position_[n_ + r] = r;
    at_upper_[n_ + r] = 0;
  }
  std::fill(binv_.begin(), binv_.end(), Real(0));
  for (int r = 0; r < m_; ++r) binv_[static_cast<std::size_t>(r) * m_ + r] = sign_[r];
  since_reinvert_ = 0;
  duals_valid_ = false;
}

template <class Real>
bool Solver<Real>::install(const Basis& warm) {
  if (warm.at_upper.size() != static_cast<std::size_t>(n_ + orig_rows_)) return false;
  std::vector<char> used(total_, 0);
  std::vector<int> cols;
  for (int c : warm.basic) {
    int j = -1;
    if (c >= 0 && c < n_) {
      j = c;
    } else if (c >= n_ && c < n_ + orig_rows_ && row_of_orig_[c - n_] >= 0) {
      j = n_ + row_of_orig_[c - n_];
    }
    if (j < 0) continue;
    if (used[j]) return false;
    used[j] = 1;
    cols.push_back(j);
  }
  for (int r = 0; r < m_ && static_cast<int>(cols.size()) < m_; ++r) {
    if (!used[n_ + r]) {
      used[n_ + r] = 1;
      cols.push_back(n_ + r);
    }
  }
  if (static_cast<int>(cols.size()) != m_) return false;
  for (int j = 0; j < n_; ++j) at_upper_[j] = warm.at_upper[j] && has_upper_[j];
  for (int r = 0; r < m_; ++r) {
    at_upper_[n_ + r] = warm.at_upper[n_ + orig_of_row_[r]] && has_upper_[n_ + r];
  }
  basis_ = cols;
  return reinvert();
}

// Rebuilds B^-1 for the columns in basis_ by pivoting them into a logical
// basis. Positions are reassigned; logical columns keep their own row.
template <class Real>
bool Solver<Real>::reinvert() {
  std::vector<char> keep(m_, 0);
  std::vector<int> structural;
  for (int c : basis_) {
    if (c >= n_) {
      keep[c - n_] = 1;
    } else {
      structural.push_back(c);
    }
  }
  std::stable_sort(structural.begin(), structural.end(), [&](int a, int b) {
    return col_start_[a + 1] - col_start_[a] < col_start_[b + 1] - col_start_[b];
  });
  std::vector<int> holder(m_);
  std::iota(holder.begin(), holder.end(), n_);
  std::fill(binv_.begin(), binv_.end(), Real(0));
  for (int r = 0; r < m_; ++r) binv_[static_cast<std::size_t>(r) * m_ + r] = sign_[r];
  for (int c : structural) {
    ftran(c);
    int best = -1;
    Real best_abs = tol_.pivot;
    for (int r = 0; r < m_; ++r) {
      if (keep[r]) continue;
      const Real a = abs_of(alpha_[r]);
      if (a > best_abs) {
        best_abs = a;
        best = r;
      }
    }
    if (best < 0) return false;
    pivot_inverse(best);
    holder[best] = c;
    keep[best] = 1;
  }
  basis_ = holder;
  std::fill(position_.begin(), position_.end(), -1);
  for (int r = 0; r < m_; ++r) position_[basis_[r]] = r;
  since_reinvert_ = 0;
  duals_valid_ = false;
  return true;
}

template <class Real>
void Solver<Real>::gather_row(int r) {
  const auto m = static_cast<std::size_t>(m_);
  for (std::size_t c = 0; c < m; ++c) row_[c] = binv_[c * m + r];
}

template <class Real>
void Solver<Real>::ftran(int column) {
  const auto m = static_cast<std::size_t>(m_);
  if (column >= n_) {
    const int r = column - n_;
    const Real* col = column_of_inverse(r);
    for (std::size_t i = 0; i < m; ++i) alpha_[i] = sign_[r] * col[i];
    return;
  }
  std::fill(alpha_.begin(), alpha_.end(), Real(0));
  for (int k = col_start_[column]; k < col_start_[column + 1]; ++k) {
    axpy(col_val_[k], column_of_inverse(col_row_[k]), alpha_.data(), m);
  }
}

// Product-form update of B^-1 for entering column alpha_ at row r. Leaves the
// old row r of B^-1 in row_.
template <class Real>
void Solver<Real>::pivot_inverse(int r) {
  const auto m = static_cast<std::size_t>(m_);
  gather_row(r);
  const Real inv_pivot = Real(1) / alpha_[r];
  for (std::size_t c = 0; c < m; ++c) {
    if (row_[c] == 0) continue;
    const Real f = row_[c] * inv_pivot;
    Real* col = column_of_inverse(static_cast<int>(c));
    if (abs_of(row_[c]) > tol_.drop) axpy(Real(-f), alpha_.data(), col, m);
    col[r] = f;
  }
}

template <class Real>
void Solver<Real>::recompute_basics() {
  std::vector<Real> rhs = rhs_;
  for (int j = 0; j < total_; ++j) {
    if (position_[j] >= 0) continue;
    const Real& v = nonbasic_value(j);
    if (v == 0) continue;
    if (j >= n_) {
      rhs[j - n_] -= sign_[j - n_] * v;
    } else {
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) rhs[col_row_[k]] -= col_val_[k] * v;
    }
  }
  const auto m = static_cast<std::size_t>(m_);
  std::fill(xb_.begin(), xb_.end(), Real(0));
  for (std::size_t c = 0; c < m; ++c) {
    if (rhs[c] != 0) axpy(rhs[c], column_of_inverse(static_cast<int>(c)), xb_.data(), m);
  }
}

template <class Real>
void Solver<Real>::full_duals() {
  const auto m = static_cast<std::size_t>(m_);
  cb_ = want_;
  for (std::size_t c = 0; c < m; ++c) y_[c] = dot(cb_.data(), column_of_inverse(static_cast<int>(c)), m);
  duals_valid_ = true;
}

// Brings y = cb^T B^-1 in line with the basic costs in want_. Few changed
// entries are patched row by row; otherwise y is rebuilt.
template <class Real>
void Solver<Real>::update_duals() {
  if (!duals_valid_) return full_duals();
  constexpr int kPatchLimit = 16;
  int changed = 0;
  for (int r = 0; r < m_ && changed <= kPatchLimit; ++r) changed += cb_[r] != want_[r];
  if (changed > kPatchLimit) return full_duals();
  for (int r = 0; r < m_ && changed > 0; ++r) {
    if (cb_[r] == want_[r]) continue;
    gather_row(r);
    axpy(Real(want_[r] - cb_[r]), row_.data(), y_.data(), static_cast<std::size_t>(m_));
    cb_[r] = want_[r];
    --changed;
  }
}

template <class Real>
void Solver<Real>::refresh() {
  if (!reinvert()) {
    // Numerically singular after many updates; restart from the logical basis.
    cold_basis();
  }
  recompute_basics();
}

template <class Real>
Real Solver<Real>::reduced_cost(int j, bool phase1) const {
  Real d = phase1 ? Real(0) : cost_[j];
  if (j >= n_) return d - y_[j - n_] * sign_[j - n_];
  for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) d -= y_[col_row_[k]] * col_val_[k];
  return d;
}

template <class Real>
Result<Real> Solver<Real>::finish(LpStatus status) const {
  Result<Real> out;
  out.status = status;
  out.iterations = iterations_;
  out.bland_switches = bland_switches_;
  out.x.resize(n_);
  for (int j = 0; j < n_; ++j) {
    out.x[j] = position_[j] >= 0 ? xb_[position_[j]] : nonbasic_value(j);
  }
  if constexpr (kIsDouble<Real>) {
    // Strip round-off below the primal tolerance.
    for (int j = 0; j < n_; ++j) {
      double& v = out.x[j];
      if (std::abs(v - lower_[j]) <= tol_.primal) v = lower_[j];
      if (has_upper_[j] && std::abs(v - upper_[j]) <= tol_.primal) v = upper_[j];
      if (std::abs(v - std::round(v)) <= 1e-12) v = std::round(v);
    }
  }
  out.objective = 0;
  for (int j = 0; j < n_; ++j) out.objective += cost_[j] * out.x[j];
  out.basis.basic.reserve(m_);
  for (int c : basis_) out.basis.basic.push_back(c < n_ ? c : n_ + orig_of_row_[c - n_]);
  out.basis.at_upper.assign(n_ + orig_rows_, 0);
  for (int j = 0; j < n_; ++j) out.basis.at_upper[j] = at_upper_[j];
  for (int r = 0; r < m_; ++r) out.basis.at_upper[n_ + orig_of_row_[r]] = at_upper_[n_ + r];
  return out;
}

template <class Real>
Result<Real> Solver<Real>::run(const Basis* warm_start) {
  if (trivially_infeasible_) {
    cold_basis();
    recompute_basics();
    return finish(LpStatus::kInfeasible);
  }
  if (!(warm_start && install(*warm_start))) {
    std::fill(at_upper_.begin(), at_upper_.end(), 0);
    cold_basis();
  }
  recompute_basics();

  const int max_iterations =
      options_.max_iterations > 0 ? options_.max_iterations : 20 * total_ + 1000;
  const int stall_limit = std::max(1, options_.stall_factor) * std::max(1, m_);
  const int refactor_interval =
      options_.refactor_interval > 0 ? options_.refactor_interval : std::max(100, m_);
  int stalled = 0;
  bool bland = false;
  const auto m = static_cast<std::size_t>(m_);

  for (;;) {
    if (since_reinvert_ >= refactor_interval) refresh();

    bool phase1 = false;
    for (int r = 0; r < m_; ++r) {
      const int c = basis_[r];
      if (xb_[r] < lower_[c] - tol_.primal) {
        want_[r] = -1;
        phase1 = true;
      } else if (has_upper_[c] && xb_[r] > upper_[c] + tol_.primal) {
        want_[r] = 1;
        phase1 = true;
      } else {
        want_[r] = 0;
      }
    }
    if (!phase1) {
      for (int r = 0; r < m_; ++r) want_[r] = cost_[basis_[r]];
    }
    update_duals();

    // Pricing.
    int q = -1;
    for (int j = 0; j < total_; ++j) {
      score_[j] = 0.0;
      if (position_[j] >= 0 || fixed(j)) continue;
      const Real d = reduced_cost(j, phase1);
      const bool eligible = at_upper_[j] ? d > tol_.dual : d < -tol_.dual;
      if (!eligible) continue;
      if (bland) {
        q = j;
        break;
      }
      score_[j] = to_double(abs_of(d));
      if (score_[j] == 0.0) score_[j] = 1e-300;  // exact mode: tiny but nonzero
    }
    if (!bland && total_ > 0) {
      const std::size_t best = k_.argmax(score_.data(), score_.size());
      if (score_[best] > 0.0) q = static_cast<int>(best);
    }

    if (q < 0) {
      if (since_reinvert_ > 0) {
        // Confirm on a fresh factorization before reporting.
        refresh();
        continue;
      }
      return finish(phase1 ? LpStatus::kInfeasible : LpStatus::kOptimal);
    }

    if (++iterations_ > max_iterations) throw LpIterationLimit(iterations_);

    ftran(q);
    const Real dir = at_upper_[q] ? Real(-1) : Real(1);

    // Harris ratio test. Basic r moves by -dir * alpha_r per unit step.
    struct Candidate {
      int row;
      Real exact;
      bool to_upper;
    };
    std::vector<Candidate> blocking;
    Real relaxed_min{};
    bool have_bound = false;
    for (int r = 0; r < m_; ++r) {
      if (abs_of(alpha_[r]) <= tol_.pivot) continue;
      const Real delta = -dir * alpha_[r];
      const int c = basis_[r];
      const Real& x = xb_[r];
      Real target;
      bool to_upper;
      if (delta < 0) {
        if (has_upper_[c] && x > upper_[c] + tol_.primal) {
          target = upper_[c];
          to_upper = true;
        } else if (x >= lower_[c] - tol_.primal) {
          target = lower_[c];
          to_upper = false;
        } else {
          continue;
        }
      } else {
        if (x < lower_[c] - tol_.primal) {
          target = lower_[c];
          to_upper = false;
        } else if (has_upper_[c] && x <= upper_[c] + tol_.primal) {
          target = upper_[c];
          to_upper = true;
        } else {
          continue;
        }
      }
      const Real step = abs_of(delta);
      Real exact = abs_of(Real(x - target)) / step;
      // x may sit marginally on the wrong side of a bound it is moving away from.
      if ((delta < 0 && x < target) || (delta > 0 && x > target)) exact = 0;
      const Real relaxed = exact + tol_.primal / step;
      if (!have_bound || relaxed < relaxed_min) relaxed_min = relaxed;
      have_bound = true;
      blocking.push_back({r, exact, to_upper});
    }

    const bool can_flip = has_upper_[q];
    const Real flip_range = can_flip ? Real(upper_[q] - lower_[q]) : Real(0);
    int leave = -1;
    Real theta{};
    bool leave_to_upper = false;
    if (can_flip && (!have_bound || flip_range <= relaxed_min)) {
      theta = flip_range;
    } else if (!have_bound) {
      if (phase1) throw std::logic_error("simplex: unbounded direction in phase 1");
      return finish(LpStatus::kUnbounded);
    } else if (bland) {
      Real best = blocking.front().exact;
      for (const Candidate& cand : blocking) best = cand.exact < best ? cand.exact : best;
      for (const Candidate& cand : blocking) {
        if (cand.exact > best + tol_.step) continue;
        if (leave < 0 || basis_[cand.row] < basis_[leave]) {
          leave = cand.row;
          leave_to_upper = cand.to_upper;
        }
      }
      theta = best;
    } else {
      Real best_abs{};
      for (const Candidate& cand : blocking) {
        if (cand.exact > relaxed_min) continue;
        const Real a = abs_of(alpha_[cand.row]);
        if (leave < 0 || a > best_abs) {
          best_abs = a;
          leave = cand.row;
          leave_to_upper = cand.to_upper;
          theta = cand.exact;
        }
      }
    }

    if (theta > tol_.step) {
      stalled = 0;
      bland = false;
    } else if (++stalled >= stall_limit && !bland) {
      bland = true;
      ++bland_switches_;
    }

    const Real entering = nonbasic_value(q) + dir * theta;
    axpy(Real(-dir * theta), alpha_.data(), xb_.data(), m);
    if (leave < 0) {
      at_upper_[q] = !at_upper_[q];
      continue;
    }
    const int out = basis_[leave];
    at_upper_[out] = leave_to_upper;
    position_[out] = -1;
    const Real priced = dot(cb_.data(), alpha_.data(), m);
    const Real entering_cost = phase1 ? Real(0) : cost_[q];
    const Real pivot = alpha_[leave];
    pivot_inverse(leave);
    axpy(Real((entering_cost - priced) / pivot), row_.data(), y_.data(), m);
    cb_[leave] = entering_cost;
    basis_[leave] = q;
    position_[q] = leave;
    at_upper_[q] = 0;
    xb_[leave] = entering;
    ++since_reinvert_;
  }
}

}  // namespace

template <class Real>
Result<Real> solve(const LpProblem& lp, const Options& options, const Basis* warm_start) {
  Solver<Real> solver(lp, options);
  return solver.run(warm_start);
}

template Result<double> solve<double>(const LpProblem&, const Options&, const Basis*);
template Result<Rational> solve<Rational>(const LpProblem&, const Options&, const Basis*);

}  // namespace pmtn::simplex
