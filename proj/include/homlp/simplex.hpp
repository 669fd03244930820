#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "homlp/error.hpp"
#include "homlp/rational.hpp"

namespace homlp {

struct LinearRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// minimize objective·x  s.t.  inequalities (row·x <= rhs), equalities
/// (row·x = rhs), x_j >= 0 where nonnegative[j] (all variables when empty).
struct LinearProgram {
  int variables = 0;
  std::vector<Rational> objective;
  std::vector<LinearRow> inequalities;
  std::vector<LinearRow> equalities;
  std::vector<bool> nonnegative;

  explicit LinearProgram(int n = 0) : variables(n), objective(n) {}

  void add_le(std::vector<Rational> coeffs, Rational rhs) {
    inequalities.push_back({std::move(coeffs), std::move(rhs)});
  }
  // stored as the negated <= row
  void add_ge(std::vector<Rational> coeffs, Rational rhs) {
    for (auto& c : coeffs) c = -c;
    inequalities.push_back({std::move(coeffs), -rhs});
  }
  void add_eq(std::vector<Rational> coeffs, Rational rhs) {
    equalities.push_back({std::move(coeffs), std::move(rhs)});
  }
  bool is_nonnegative(int j) const { return nonnegative.empty() || nonnegative[j]; }
};

enum class LPStatus { optimal, infeasible, unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
  std::vector<int> tight;              // inequality rows met with equality
  std::vector<Rational> dual_ineq;     // <= 0 for a minimisation
  std::vector<Rational> dual_eq;       // free
  std::uint64_t pivots = 0;
};

struct LPOptions {
  std::ostream* trace = nullptr;  // tableau dump after every pivot
  std::uint64_t max_pivots = 1'000'000;
};

namespace detail {

// Dense two-phase tableau. Column layout: structural (free variables split
// into +/- parts), one slack per <= row, then artificials for rows whose
// right-hand side had to be negated. Equalities enter as two <= rows.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const LPOptions& opt) : lp_(lp), opt_(opt) {
    for (int j = 0; j < lp.variables; ++j) {
      column_of_var_.push_back(structural_++);
      if (!lp.is_nonnegative(j)) neg_column_of_var_.push_back(structural_++);
      else neg_column_of_var_.push_back(-1);
    }
    for (const auto& r : lp.inequalities) add_source_row(r, 1);
    for (const auto& r : lp.equalities) {
      add_source_row(r, 1);
      add_source_row(r, -1);
    }
    m_ = static_cast<int>(source_.size());
    int artificials = 0;
    for (int i = 0; i < m_; ++i) artificials += source_[i].negated ? 1 : 0;
    slack0_ = structural_;
    art0_ = slack0_ + m_;
    cols_ = art0_ + artificials;
    t_.assign(m_, std::vector<mpq_class>(cols_ + 1));
    basis_.resize(m_);
    int a = art0_;
    for (int i = 0; i < m_; ++i) {
      const auto& src = source_[i];
      mpq_class sign = src.negated ? -1 : 1;
      for (int j = 0; j < lp.variables; ++j) {
        const mpq_class& c = src.row->coeffs[j].raw();
        t_[i][column_of_var_[j]] = sign * src.orient * c;
        if (neg_column_of_var_[j] >= 0) t_[i][neg_column_of_var_[j]] = -sign * src.orient * c;
      }
      t_[i][slack0_ + i] = sign;
      t_[i][cols_] = sign * src.orient * src.row->rhs.raw();
      if (src.negated) {
        t_[i][a] = 1;
        basis_[i] = a++;
      } else {
        basis_[i] = slack0_ + i;
      }
    }
  }

  LPSolution solve() {
    LPSolution out;
    if (cols_ > art0_) {
      std::vector<mpq_class> phase1(cols_ + 1);
      for (int j = art0_; j < cols_; ++j) phase1[j] = 1;
      set_objective(phase1);
      if (!run(cols_, out.pivots)) throw Error("phase one cannot be unbounded");
      if (obj_[cols_] != 0) {
        out.status = LPStatus::infeasible;
        return out;
      }
      drive_out_artificials(out.pivots);
    }
    std::vector<mpq_class> phase2(cols_ + 1);
    for (int j = 0; j < lp_.variables; ++j) {
      phase2[column_of_var_[j]] = lp_.objective[j].raw();
      if (neg_column_of_var_[j] >= 0) phase2[neg_column_of_var_[j]] = -lp_.objective[j].raw();
    }
    set_objective(phase2);
    if (!run(art0_, out.pivots)) {
      out.status = LPStatus::unbounded;
      return out;
    }
    out.status = LPStatus::optimal;
    extract(out);
    return out;
  }

 private:
  struct SourceRow {
    const LinearRow* row;
    int orient;    // -1 for the second half of an equality
    bool negated;  // rhs < 0, multiplied through by -1
  };

  void add_source_row(const LinearRow& r, int orient) {
    if (static_cast<int>(r.coeffs.size()) != lp_.variables) {
      throw DomainError("LP row width differs from variable count");
    }
    source_.push_back({&r, orient, (orient * r.rhs.sign()) < 0});
  }

  // Objective row holds reduced costs; obj_[cols_] is minus the value.
  void set_objective(const std::vector<mpq_class>& c) {
    obj_ = c;
    for (int i = 0; i < m_; ++i) {
      const mpq_class cb = obj_[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) obj_[j] -= cb * t_[i][j];
    }
  }

  void pivot(int r, int c) {
    mpq_class inv = 1 / t_[r][c];
    for (int j = 0; j <= cols_; ++j) t_[r][j] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      mpq_class f = t_[i][c];
      for (int j = 0; j <= cols_; ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    if (obj_[c] != 0) {
      mpq_class f = obj_[c];
      for (int j = 0; j <= cols_; ++j) {
        if (t_[r][j] != 0) obj_[j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Bland's rule: lowest entering column with negative reduced cost, ties in
  // the ratio test broken by the lowest basic column. Only columns below
  // `limit` may enter. Returns false when unbounded.
  bool run(int limit, std::uint64_t& pivots) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        mpq_class ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      if (++pivots > opt_.max_pivots) throw BudgetExceeded("simplex pivots", opt_.max_pivots);
      pivot(leave, enter);
      if (opt_.trace) dump(*opt_.trace);
    }
  }

  void drive_out_artificials(std::uint64_t& pivots) {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < art0_) continue;
      for (int j = 0; j < art0_; ++j) {
        if (t_[i][j] != 0) {
          ++pivots;
          pivot(i, j);
          break;
        }
      }
      // a row with no structural or slack entry is redundant; its artificial
      // stays basic at zero and can never move again
    }
  }

  void extract(LPSolution& out) const {
    std::vector<mpq_class> col_value(cols_, 0);
    for (int i = 0; i < m_; ++i) col_value[basis_[i]] = t_[i][cols_];
    out.value = Rational(BigInt(0));
    out.x.resize(lp_.variables);
    for (int j = 0; j < lp_.variables; ++j) {
      mpq_class v = col_value[column_of_var_[j]];
      if (neg_column_of_var_[j] >= 0) v -= col_value[neg_column_of_var_[j]];
      out.x[j] = from_mpq(v);
      out.value += lp_.objective[j] * out.x[j];
    }
    const int n_ineq = static_cast<int>(lp_.inequalities.size());
    for (int i = 0; i < n_ineq; ++i) {
      out.dual_ineq.push_back(from_mpq(-obj_[slack0_ + i]));
      if (col_value[slack0_ + i] == 0) out.tight.push_back(i);
    }
    for (std::size_t e = 0; e < lp_.equalities.size(); ++e) {
      int a = n_ineq + 2 * static_cast<int>(e);
      out.dual_eq.push_back(from_mpq(-obj_[slack0_ + a] + obj_[slack0_ + a + 1]));
    }
  }

  static Rational from_mpq(const mpq_class& q) {
    return Rational(BigInt(q.get_num()), BigInt(q.get_den()));
  }

  void dump(std::ostream& os) const {
    os << "basis:";
    for (int b : basis_) os << ' ' << b;
    os << '\n';
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j <= cols_; ++j) os << (j ? "\t" : "") << t_[i][j];
      os << '\n';
    }
    for (int j = 0; j <= cols_; ++j) os << (j ? "\t" : "") << obj_[j];
    os << "\n\n";
  }

  const LinearProgram& lp_;
  const LPOptions& opt_;
  std::vector<SourceRow> source_;
  std::vector<int> column_of_var_, neg_column_of_var_;
  int structural_ = 0, m_ = 0, slack0_ = 0, art0_ = 0, cols_ = 0;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> obj_;
  std::vector<int> basis_;
};

}  // namespace detail

inline LPSolution solve_min(const LinearProgram& lp, const LPOptions& opt = {}) {
  if (static_cast<int>(lp.objective.size()) != lp.variables) {
    throw DomainError("objective width differs from variable count");
  }
  if (!lp.nonnegative.empty() && static_cast<int>(lp.nonnegative.size()) != lp.variables) {
    throw DomainError("nonnegativity flags differ from variable count");
  }
  return detail::Tableau(lp, opt).solve();
}

/// maximize objective·x; value, duals and certificate are reported for the
/// maximisation (duals of <= rows are then >= 0).
inline LPSolution solve_max(LinearProgram lp, const LPOptions& opt = {}) {
  for (auto& c : lp.objective) c = -c;
  LPSolution s = solve_min(lp, opt);
  s.value = -s.value;
  for (auto& y : s.dual_ineq) y = -y;
  for (auto& y : s.dual_eq) y = -y;
  return s;
}

/// Checks an optimal minimisation result against its own dual solution:
/// y <= 0 on inequality rows, c - A^T y - E^T z >= 0 on nonnegative
/// variables and = 0 on free ones, every primal row satisfied, and
/// b·y + d·z equal to the primal value. All exact.
inline bool verify_min_certificate(const LinearProgram& lp, const LPSolution& s) {
  if (s.status != LPStatus::optimal) return false;
  const int n = lp.variables;
  Rational primal;
  for (int j = 0; j < n; ++j) {
    if (lp.is_nonnegative(j) && s.x[j].sign() < 0) return false;
    primal += lp.objective[j] * s.x[j];
  }
  if (primal != s.value) return false;
  std::vector<Rational> reduced = lp.objective;
  Rational dual;
  for (std::size_t i = 0; i < lp.inequalities.size(); ++i) {
    const auto& row = lp.inequalities[i];
    Rational lhs;
    for (int j = 0; j < n; ++j) lhs += row.coeffs[j] * s.x[j];
    if (lhs > row.rhs) return false;
    if (s.dual_ineq[i].sign() > 0) return false;
    for (int j = 0; j < n; ++j) reduced[j] -= row.coeffs[j] * s.dual_ineq[i];
    dual += row.rhs * s.dual_ineq[i];
  }
  for (std::size_t e = 0; e < lp.equalities.size(); ++e) {
    const auto& row = lp.equalities[e];
    Rational lhs;
    for (int j = 0; j < n; ++j) lhs += row.coeffs[j] * s.x[j];
    if (lhs != row.rhs) return false;
    for (int j = 0; j < n; ++j) reduced[j] -= row.coeffs[j] * s.dual_eq[e];
    dual += row.rhs * s.dual_eq[e];
  }
  for (int j = 0; j < n; ++j) {
    if (lp.is_nonnegative(j) ? reduced[j].sign() < 0 : reduced[j].sign() != 0) return false;
  }
  return dual == s.value;
}

/// Same check for a result of solve_max.
inline bool verify_max_certificate(LinearProgram lp, LPSolution s) {
  for (auto& c : lp.objective) c = -c;
  s.value = -s.value;
  for (auto& y : s.dual_ineq) y = -y;
  for (auto& y : s.dual_eq) y = -y;
  return verify_min_certificate(lp, s);
}

}  // namespace homlp
