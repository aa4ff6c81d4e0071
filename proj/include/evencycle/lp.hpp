#pragma once

#include <array>
#include <atomic>
#include <optional>
#include <thread>
#include <vector>

#include "evencycle/rational.hpp"

namespace evencycle {

// ---------------------------------------------------------------------------
// Exact-rational linear programs: the 36-case family, a Bland-rule two-phase
// simplex with verified primal/dual certificates, and an independent vertex
// enumeration over the same polytope. No floating point anywhere here.
// ---------------------------------------------------------------------------

/// One of the 36 decomposition shapes: B12 ∈ {1,2} and B23 ∈ {2,3} pick the
/// size ordering inside the (X1,X2) and (X2,X3) pairs; D12, D23 ∈ {1,2,3}
/// pick which of the three density regimes dominates each pair.
struct CaseId {
  int b12 = 1, b23 = 2, d12 = 1, d23 = 1;

  static std::array<CaseId, 36> all() {
    std::array<CaseId, 36> cases;
    std::size_t idx = 0;
    for (int b12 : {1, 2})
      for (int b23 : {2, 3})
        for (int d12 : {1, 2, 3})
          for (int d23 : {1, 2, 3}) cases[idx++] = CaseId{b12, b23, d12, d23};
    return cases;
  }

  std::string label() const {
    return "(" + std::to_string(b12) + "," + std::to_string(b23) + "," + std::to_string(d12) +
           "," + std::to_string(d23) + ")";
  }

  bool operator==(const CaseId&) const = default;
};

struct LinConstraint {
  std::vector<Rat> coeff;
  bool is_ge = false;  // coeff·x >= rhs when set, else coeff·x <= rhs
  Rat rhs;
  std::string tag;
};

struct LinearProgram {
  std::vector<std::string> var_names;
  std::vector<LinConstraint> constraints;
  std::vector<Rat> objective;  // sense: maximize

  u32 nvars() const { return static_cast<u32>(var_names.size()); }
};

// Variable order is fixed: x1 x2 x3 delta_star delta1 delta2 delta3 tau.
enum : u32 { kX1 = 0, kX2, kX3, kDStar, kD1, kD2, kD3, kTau, kNumLpVars };

/// Transcribes one case into constraints. delta_upper is 2/5 in the real
/// family; the tamper check re-runs with a loosened box.
inline LinearProgram build_case_lp(const CaseId& c, const Rat& delta_upper = Rat(2, 5)) {
  LinearProgram lp;
  lp.var_names = {"x1", "x2", "x3", "delta_star", "delta1", "delta2", "delta3", "tau"};
  lp.objective.assign(kNumLpVars, Rat(0));
  lp.objective[kX1] = 1;
  lp.objective[kD1] = 1;
  lp.objective[kD2] = 1;
  lp.objective[kD3] = 1;

  auto add = [&](std::vector<std::pair<u32, Rat>> terms, bool is_ge, Rat rhs, std::string tag) {
    LinConstraint con;
    con.coeff.assign(kNumLpVars, Rat(0));
    for (auto& [var, coefficient] : terms) con.coeff[var] += coefficient;
    con.is_ge = is_ge;
    con.rhs = std::move(rhs);
    con.tag = std::move(tag);
    lp.constraints.push_back(std::move(con));
  };

  const std::array<u32, 3> x = {kX1, kX2, kX3};
  const std::array<u32, 3> d = {kD1, kD2, kD3};
  for (int i = 0; i < 3; ++i) {
    add({{x[i], 1}}, true, Rat(0), lp.var_names[x[i]] + ">=0");
    add({{x[i], 1}}, false, Rat(1), lp.var_names[x[i]] + "<=1");
  }
  add({{kDStar, 1}}, true, Rat(0), "delta_star>=0");
  add({{kDStar, 1}}, false, delta_upper, "delta_star<=max");
  for (int i = 0; i < 3; ++i) {
    add({{d[i], 1}}, true, Rat(0), lp.var_names[d[i]] + ">=0");
    add({{d[i], 1}}, false, delta_upper, lp.var_names[d[i]] + "<=max");
  }
  add({{kTau, 1}}, true, Rat(0), "tau>=0");
  for (int i = 0; i < 3; ++i)
    add({{d[i], 1}, {kDStar, -1}}, false, Rat(0), lp.var_names[d[i]] + "<=delta_star");
  add({{kDStar, 1}, {kX1, 1}}, false, Rat(1), "delta_star+x1<=1");
  for (int i = 0; i < 3; ++i)
    add({{d[i], 1}, {x[i], 1}}, false, Rat(1), lp.var_names[d[i]] + "+" + lp.var_names[x[i]] + "<=1");

  // Size orderings dictated by B12 and B23.
  u32 hi12 = c.b12 == 1 ? kX1 : kX2;
  u32 lo12 = c.b12 == 1 ? kX2 : kX1;
  add({{hi12, 1}, {lo12, -1}}, true, Rat(0), "order12");
  u32 hi23 = c.b23 == 3 ? kX3 : kX2;
  u32 lo23 = c.b23 == 3 ? kX2 : kX3;
  add({{hi23, 1}, {lo23, -1}}, true, Rat(0), "order23");

  // Density regimes. In log_m scale the three candidate dominators for a pair
  // with sizes (hi, lo) and edge term v1 = x_first + d_first are:
  //   v1,  v2 = hi + lo/3,  v3 = lo + hi/2,
  // and regime D asserts v_D >= the other two. Each regime also carries the
  // hexagon lower bound it certifies: the pair supersaturation reads
  //   tau >= [6v1 - 3(lo+hi)] + min-term, with the min-term resolved by the
  // regime (0 in regime 1, 3v1 - 3hi - lo in regime 2, 4v1 - 4lo - 2hi in
  // regime 3); regime 1's instance is the plain tau >= 6v1 - 3(x1+x2).
  auto add_regime = [&](u32 x_first, u32 d_first, u32 hi, u32 lo, int regime,
                        const std::string& suffix) {
    std::array<std::vector<std::pair<u32, Rat>>, 4> v;
    v[1] = {{x_first, Rat(1)}, {d_first, Rat(1)}};
    v[2] = {{hi, Rat(1)}, {lo, Rat(1, 3)}};
    v[3] = {{lo, Rat(1)}, {hi, Rat(1, 2)}};
    for (int other = 1; other <= 3; ++other) {
      if (other == regime) continue;
      std::vector<std::pair<u32, Rat>> terms = v[regime];
      for (auto [var, coefficient] : v[other]) terms.emplace_back(var, -coefficient);
      add(std::move(terms), true, Rat(0),
          "regime" + suffix + ":v" + std::to_string(regime) + ">=v" + std::to_string(other));
    }
    if (regime == 1) {
      add({{kTau, 1}, {x_first, -6}, {d_first, -6}, {hi, 3}, {lo, 3}}, true, Rat(0),
          "tau_bound" + suffix + ":full");
    } else if (regime == 2) {
      add({{kTau, 1}, {x_first, -9}, {d_first, -9}, {hi, 6}, {lo, 4}}, true, Rat(0),
          "tau_bound" + suffix + ":capped_by_RL13");
    } else {
      add({{kTau, 1}, {x_first, -10}, {d_first, -10}, {hi, 5}, {lo, 7}}, true, Rat(0),
          "tau_bound" + suffix + ":capped_by_LsqrtR");
    }
  };
  add_regime(kX1, kD1, hi12, lo12, c.d12, "12");
  add_regime(kX2, kD2, hi23, lo23, c.d23, "23");

  add({{kX1, 1}, {kD1, 1}, {kD2, 1}, {kD3, 1}, {kTau, -1}}, true, Rat(0), "objective>=tau");
  return lp;
}

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rat optimum;
  std::vector<Rat> primal;  // per variable
  std::vector<Rat> dual;    // per constraint, certifies optimality
};

namespace lp_detail {

// Dense exact tableau simplex. Free variables are split x = u - w; rows are
// normalized to <=; rows with negative rhs get artificials and a phase-1
// feasibility solve. Bland's rule everywhere, so no cycling.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp), nv_(lp.nvars()), m_(lp.constraints.size()) {
    rows_.resize(m_);
    rhs_.resize(m_);
    flipped_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& con = lp_.constraints[i];
      std::vector<Rat> row(con.coeff);
      Rat b = con.rhs;
      if (con.is_ge) {  // normalize to <=
        for (auto& v : row) v = -v;
        b = -b;
      }
      rows_[i] = std::move(row);
      rhs_[i] = b;
    }
  }

  LpOutcome solve() {
    build_tableau();
    if (!phase1()) return {LpStatus::Infeasible, Rat(0), {}, {}};
    int status = phase2();
    if (status == kUnbounded) return {LpStatus::Unbounded, Rat(0), {}, {}};
    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.primal.assign(nv_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      u32 col = basis_[i];
      if (col < 2 * nv_) {
        u32 var = col / 2;
        Rat val = tab_[i][ncols_];
        out.primal[var] += (col % 2 == 0) ? val : -val;
      }
    }
    for (u32 j = 0; j < nv_; ++j) out.optimum += lp_.objective[j] * out.primal[j];
    out.dual.assign(m_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      u32 marker = flipped_[i] ? art_col_[i] : slack_col_[i];
      Rat mult = reduced_cost(marker);  // z_j - c_j with c_j = 0 off phase-1
      out.dual[i] = flipped_[i] ? -mult : mult;
      out.dual[i].canonicalize();
    }
    out.optimum.canonicalize();
    return out;
  }

 private:
  static constexpr int kOk = 0, kUnbounded = 1;

  void build_tableau() {
    n_art_ = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (rhs_[i] < 0) ++n_art_;
    ncols_ = 2 * nv_ + static_cast<u32>(m_) + n_art_;
    tab_.assign(m_, std::vector<Rat>(ncols_ + 1, Rat(0)));
    basis_.assign(m_, 0);
    slack_col_.assign(m_, 0);
    art_col_.assign(m_, ncols_);
    cost_.assign(ncols_, Rat(0));

    u32 next_art = 2 * nv_ + static_cast<u32>(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = rhs_[i] < 0;
      flipped_[i] = flip;
      Rat sign = flip ? Rat(-1) : Rat(1);
      for (u32 j = 0; j < nv_; ++j) {
        tab_[i][2 * j] = sign * rows_[i][j];
        tab_[i][2 * j + 1] = -sign * rows_[i][j];
      }
      slack_col_[i] = 2 * nv_ + static_cast<u32>(i);
      tab_[i][slack_col_[i]] = sign;
      tab_[i][ncols_] = sign * rhs_[i];
      if (flip) {
        art_col_[i] = next_art++;
        tab_[i][art_col_[i]] = 1;
        basis_[i] = art_col_[i];
      } else {
        basis_[i] = slack_col_[i];
      }
    }
  }

  Rat reduced_cost(u32 col) const {
    Rat z(0);
    for (std::size_t i = 0; i < m_; ++i)
      if (cost_[basis_[i]] != 0) z += cost_[basis_[i]] * tab_[i][col];
    return z - cost_[col];
  }

  //

  void pivot(std::size_t row, u32 col) {
    Rat inv = tab_[row][col];
    for (u32 j = 0; j <= ncols_; ++j) {
      tab_[row][j] /= inv;
      tab_[row][j].canonicalize();
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      Rat factor = tab_[i][col];
      for (u32 j = 0; j <= ncols_; ++j) {
        tab_[i][j] -= factor * tab_[row][j];
        tab_[i][j].canonicalize();
      }
    }
    basis_[row] = col;
  }

  // Bland: entering = lowest-index improving column; leaving = lowest basis
  // index among minimum ratios.
  int run(u32 usable_cols) {
    while (true) {
      u32 entering = ncols_;
      for (u32 j = 0; j < usable_cols; ++j) {
        if (reduced_cost(j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == ncols_) return kOk;
      std::size_t leaving = m_;
      Rat best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_[i][entering] <= 0) continue;
        Rat ratio = tab_[i][ncols_] / tab_[i][entering];
        if (leaving == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == m_) return kUnbounded;
      pivot(leaving, entering);
    }
  }

  bool phase1() {
    if (n_art_ == 0) return true;
    std::fill(cost_.begin(), cost_.end(), Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (art_col_[i] < ncols_) cost_[art_col_[i]] = -1;  // maximize -Σ artificials
    run(ncols_);
    Rat value(0);
    for (std::size_t i = 0; i < m_; ++i)
      if (cost_[basis_[i]] != 0) value += cost_[basis_[i]] * tab_[i][ncols_];
    if (value != 0) return false;
    // Pivot any still-basic artificials out on a structural/slack column.
    for (std::size_t i = 0; i < m_; ++i) {
      if (art_col_[i] == ncols_) continue;
      auto basic_art = std::find(basis_.begin(), basis_.end(), art_col_[i]);
      if (basic_art == basis_.end()) continue;
      std::size_t row = static_cast<std::size_t>(basic_art - basis_.begin());
      u32 col = 2 * nv_ + static_cast<u32>(m_);
      for (u32 j = 0; j < 2 * nv_ + m_; ++j)
        if (tab_[row][j] != 0) {
          col = j;
          break;
        }
      if (col < 2 * nv_ + m_) pivot(row, col);
      // A fully zero row is redundant; the artificial stays basic at zero.
    }
    return true;
  }

  int phase2() {
    std::fill(cost_.begin(), cost_.end(), Rat(0));
    for (u32 j = 0; j < nv_; ++j) {
      cost_[2 * j] = lp_.objective[j];
      cost_[2 * j + 1] = -lp_.objective[j];
    }
    // Artificials stay excluded from entering; they remain at value zero.
    return run(2 * nv_ + static_cast<u32>(m_));
  }

  const LinearProgram& lp_;
  u32 nv_;
  std::size_t m_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<bool> flipped_;
  std::vector<std::vector<Rat>> tab_;
  std::vector<Rat> cost_;
  std::vector<u32> basis_, slack_col_, art_col_;
  u32 ncols_ = 0, n_art_ = 0;
};

}  // namespace lp_detail

inline LpOutcome solve_lp_exact(const LinearProgram& lp) {
  return lp_detail::Simplex(lp).solve();
}

/// Exact re-substitution of both certificates: the primal witness satisfies
/// every constraint and meets the claimed optimum; the dual multipliers are
/// sign-correct, dominate the objective row, and reproduce the optimum. Weak
/// duality then pins optimality with no trust in the pivot path.
inline bool verify_certificates(const LinearProgram& lp, const LpOutcome& out) {
  if (out.status != LpStatus::Optimal) return false;
  if (out.primal.size() != lp.nvars() || out.dual.size() != lp.constraints.size()) return false;
  Rat primal_value(0);
  for (u32 j = 0; j < lp.nvars(); ++j) primal_value += lp.objective[j] * out.primal[j];
  if (primal_value != out.optimum) return false;
  std::vector<Rat> combo(lp.nvars(), Rat(0));
  Rat dual_value(0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& con = lp.constraints[i];
    Rat activity(0);
    for (u32 j = 0; j < lp.nvars(); ++j) activity += con.coeff[j] * out.primal[j];
    if (con.is_ge ? activity < con.rhs : activity > con.rhs) return false;
    // Normalized to <=: a ge-constraint's multiplier certifies with flipped sign.
    Rat y = out.dual[i];
    if (y < 0) return false;
    Rat sign = con.is_ge ? Rat(-1) : Rat(1);
    for (u32 j = 0; j < lp.nvars(); ++j) combo[j] += sign * y * con.coeff[j];
    dual_value += sign * y * con.rhs;
  }
  for (u32 j = 0; j < lp.nvars(); ++j)
    if (combo[j] != lp.objective[j]) return false;  // variables are free: exact equality
  return dual_value == out.optimum;
}

// ---------------------------------------------------------------------------
// Independent route: exhaustive vertex enumeration by incremental cutting,
// starting from a bounding box and keeping exact tight-set bookkeeping.
// ---------------------------------------------------------------------------

namespace lp_detail {

struct EnumVertex {
  std::vector<Rat> pt;
  u64 tight = 0;
};

// Rank of the integer constraint rows via fraction-free elimination.
inline u32 integer_rank(std::vector<std::vector<long long>> rows, u32 cols) {
  u32 rank = 0;
  using ll = long long;
  using lll = __int128;
  ll prev_pivot = 1;
  for (u32 col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows.size() && rows[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[rank], rows[pivot_row]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      for (u32 j = col + 1; j < cols; ++j) {
        lll num = static_cast<lll>(rows[rank][col]) * rows[i][j] -
                  static_cast<lll>(rows[i][col]) * rows[rank][j];
        rows[i][j] = static_cast<ll>(num / prev_pivot);
      }
      rows[i][col] = 0;
    }
    prev_pivot = rows[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace lp_detail

struct VertexEnumResult {
  std::optional<Rat> optimum;  // nullopt when the polytope is empty
  std::size_t vertex_count = 0;
};

/// Enumerates every vertex of the feasible polytope (which must be contained
/// in the supplied per-variable box) and maximizes the objective over them.
inline VertexEnumResult vertex_enumeration_optimum(
    const LinearProgram& lp, const std::vector<std::pair<Rat, Rat>>& box) {
  const u32 nv = lp.nvars();
  if (box.size() != nv) throw InvalidArgumentError("box size mismatch");

  // Unified constraint list: the LP's rows normalized to <=, then synthetic
  // box facets. Tight bitsets index into this list.
  struct Row {
    std::vector<Rat> coeff;
    Rat rhs;
    std::vector<long long> int_row;
  };
  std::vector<Row> rows;
  auto push_row = [&](std::vector<Rat> coeff, Rat rhs) {
    Row row{std::move(coeff), std::move(rhs), {}};
    Int lcm(1);
    for (const auto& c : row.coeff) {
      Int den = c.get_den();
      lcm = lcm / gcd(lcm, den) * den;
    }
    row.int_row.resize(nv);
    for (u32 j = 0; j < nv; ++j) {
      Int scaled = row.coeff[j].get_num() * (lcm / row.coeff[j].get_den());
      if (!scaled.fits_slong_p()) throw InternalError("constraint coefficients out of range");
      row.int_row[j] = scaled.get_si();
    }
    rows.push_back(std::move(row));
  };
  for (const auto& con : lp.constraints) {
    std::vector<Rat> coeff(con.coeff);
    Rat rhs = con.rhs;
    if (con.is_ge) {
      for (auto& c : coeff) c = -c;
      rhs = -rhs;
    }
    push_row(std::move(coeff), std::move(rhs));
  }
  const std::size_t num_lp_rows = rows.size();
  for (u32 j = 0; j < nv; ++j) {
    std::vector<Rat> lo(nv, Rat(0)), hi(nv, Rat(0));
    lo[j] = -1;
    hi[j] = 1;
    push_row(std::move(lo), -box[j].first);   // -x_j <= -lo
    push_row(std::move(hi), box[j].second);   // x_j <= hi
  }
  if (rows.size() > 64) throw InternalError("tight bitset limited to 64 constraints");

  auto slack = [&](const Row& row, const std::vector<Rat>& pt) {
    Rat s = row.rhs;
    for (u32 j = 0; j < nv; ++j)
      if (row.coeff[j] != 0) s -= row.coeff[j] * pt[j];
    s.canonicalize();
    return s;
  };
  auto full_tight = [&](const std::vector<Rat>& pt) {
    u64 mask = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (slack(rows[r], pt) == 0) mask |= u64{1} << r;
    return mask;
  };

  // Box corners seed the enumeration. Tight sets are stored over the whole
  // unified list; the adjacency test masks down to processed constraints.
  std::vector<lp_detail::EnumVertex> verts;
  for (u64 corner = 0; corner < (u64{1} << nv); ++corner) {
    std::vector<Rat> pt(nv);
    for (u32 j = 0; j < nv; ++j) pt[j] = (corner >> j) & 1 ? box[j].second : box[j].first;
    u64 tight = full_tight(pt);
    verts.push_back({std::move(pt), tight});
  }
  u64 processed_mask = 0;
  for (std::size_t r = num_lp_rows; r < rows.size(); ++r) processed_mask |= u64{1} << r;

  std::vector<Rat> slacks;
  for (std::size_t cut = 0; cut < num_lp_rows; ++cut) {
    slacks.resize(verts.size());
    bool any_viol = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      slacks[i] = slack(rows[cut], verts[i].pt);
      any_viol |= slacks[i] < 0;
    }
    u64 cut_bit = u64{1} << cut;
    if (!any_viol) {
      processed_mask |= cut_bit;
      continue;
    }
    std::vector<lp_detail::EnumVertex> next;
    std::vector<std::size_t> sat, viol;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (slacks[i] < 0) {
        viol.push_back(i);
      } else {
        sat.push_back(i);
        next.push_back(verts[i]);
      }
    }
    for (std::size_t ui : sat) {
      if (slacks[ui] == 0) continue;  // on the plane: no edge crossing here
      for (std::size_t wi : viol) {
        u64 common = verts[ui].tight & verts[wi].tight & processed_mask;
        if (std::popcount(common) < static_cast<int>(nv) - 1) continue;
        std::vector<std::vector<long long>> test_rows;
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (common & (u64{1} << r)) test_rows.push_back(rows[r].int_row);
        if (lp_detail::integer_rank(std::move(test_rows), nv) != nv - 1) continue;
        Rat lambda = slacks[ui] / (slacks[ui] - slacks[wi]);
        std::vector<Rat> pt(nv);
        for (u32 j = 0; j < nv; ++j) {
          pt[j] = verts[ui].pt[j] + lambda * (verts[wi].pt[j] - verts[ui].pt[j]);
          pt[j].canonicalize();
        }
        bool duplicate = false;
        for (const auto& existing : next)
          if (existing.pt == pt) {
            duplicate = true;
            break;
          }
        if (!duplicate) {
          u64 tight = full_tight(pt);
          next.push_back({std::move(pt), tight});
        }
      }
    }
    processed_mask |= cut_bit;
    verts = std::move(next);
    if (verts.empty()) return {std::nullopt, 0};
  }

  VertexEnumResult result;
  result.vertex_count = verts.size();
  for (const auto& v : verts) {
    Rat value(0);
    for (u32 j = 0; j < nv; ++j) value += lp.objective[j] * v.pt[j];
    value.canonicalize();
    if (!result.optimum || value > *result.optimum) result.optimum = value;
  }
  return result;
}

/// Bounding box for a case LP: the δ/x boxes as built, τ capped strictly
/// above its feasible maximum (τ <= objective <= 1 + 3·δmax).
inline std::vector<std::pair<Rat, Rat>> case_lp_box(const Rat& delta_upper = Rat(2, 5)) {
  std::vector<std::pair<Rat, Rat>> box(kNumLpVars);
  for (u32 j : {kX1, kX2, kX3}) box[j] = {Rat(0), Rat(1)};
  for (u32 j : {kDStar, kD1, kD2, kD3}) box[j] = {Rat(0), delta_upper};
  box[kTau] = {Rat(0), Rat(2) + 3 * delta_upper};
  return box;
}

// ---------------------------------------------------------------------------
// The full 36-case verification with both routes and certificates.
// ---------------------------------------------------------------------------

struct CaseReport {
  CaseId id;
  LpStatus status = LpStatus::Infeasible;
  Rat optimum;
  u32 constraint_count = 0;
  bool certificates_ok = false;
  std::optional<Rat> enum_optimum;
  std::size_t enum_vertex_count = 0;
  bool routes_agree = false;
  u64 certificate_hash = 0;
  LpOutcome outcome;
};

struct VerifyAllReport {
  std::vector<CaseReport> cases;
  Rat global_max;
  bool any_optimal = false;
  bool pass = false;
  std::vector<CaseId> attaining;
};

inline CaseReport verify_case(const CaseId& id, const Rat& delta_upper = Rat(2, 5)) {
  CaseReport rep;
  rep.id = id;
  LinearProgram lp = build_case_lp(id, delta_upper);
  rep.constraint_count = static_cast<u32>(lp.constraints.size());
  rep.outcome = solve_lp_exact(lp);
  rep.status = rep.outcome.status;
  auto enumerated = vertex_enumeration_optimum(lp, case_lp_box(delta_upper));
  rep.enum_optimum = enumerated.optimum;
  rep.enum_vertex_count = enumerated.vertex_count;
  if (rep.status == LpStatus::Optimal) {
    rep.optimum = rep.outcome.optimum;
    rep.certificates_ok = verify_certificates(lp, rep.outcome);
    rep.routes_agree = rep.enum_optimum && *rep.enum_optimum == rep.optimum;
    std::string blob;
    for (const auto& v : rep.outcome.primal) blob += rat_str(v) + ";";
    blob += "|";
    for (const auto& v : rep.outcome.dual) blob += rat_str(v) + ";";
    rep.certificate_hash = fnv1a64(blob);
  } else {
    rep.routes_agree = rep.status == LpStatus::Infeasible && !rep.enum_optimum;
  }
  return rep;
}

inline VerifyAllReport verify_all_cases(unsigned threads = 0,
                                        const Rat& delta_upper = Rat(2, 5)) {
  auto ids = CaseId::all();
  VerifyAllReport report;
  report.cases.resize(ids.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, ids.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t idx = cursor.fetch_add(1);
      if (idx >= ids.size()) return;
      report.cases[idx] = verify_case(ids[idx], delta_upper);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  const Rat bound(8, 5);
  report.pass = true;
  for (const auto& c : report.cases) {
    if (c.status == LpStatus::Optimal) {
      if (!report.any_optimal || c.optimum > report.global_max) report.global_max = c.optimum;
      report.any_optimal = true;
      if (!c.certificates_ok || !c.routes_agree || c.optimum > bound) report.pass = false;
    } else if (c.status == LpStatus::Infeasible) {
      if (!c.routes_agree) report.pass = false;  // enumeration must agree it is empty
    } else {
      report.pass = false;  // an unbounded case would be a transcription bug
    }
  }
  for (const auto& c : report.cases)
    if (c.status == LpStatus::Optimal && report.any_optimal && c.optimum == report.global_max)
      report.attaining.push_back(c.id);
  return report;
}

}  // namespace evencycle
