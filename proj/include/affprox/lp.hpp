#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "affprox/errors.hpp"
#include "affprox/rational.hpp"

namespace affprox {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::less_equal;
    Rational rhs;
};

/// Dense rational linear program: optimize objective.x subject to constraint
/// rows and optional per-variable bounds (absent bound = unbounded on that
/// side). Empty bound vectors are read as all-absent.
struct LinearProgram {
    Sense sense = Sense::minimize;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;

    LinearProgram() = default;
    LinearProgram(Sense s, std::vector<Rational> obj)
        : sense(s),
          objective(std::move(obj)),
          lower(objective.size()),
          upper(objective.size()) {}

    std::size_t num_vars() const { return objective.size(); }

    void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
        constraints.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
    }
    void set_lower(std::size_t var, Rational bound) { lower.at(var) = std::move(bound); }
    void set_upper(std::size_t var, Rational bound) { upper.at(var) = std::move(bound); }
};

/// Optimal solution with its dual certificate. `dual` has one multiplier per
/// constraint row. Convention, stated for the minimization form (a maximize
/// program is certified through its negated objective, with duals negated
/// alongside): less_equal rows carry dual <= 0, greater_equal rows >= 0,
/// equality rows are free, and with reduced costs
/// d_j = c_j - sum_i dual_i a_ij split into bound multipliers, the dual
/// objective equals the primal objective exactly.
struct Optimal {
    std::vector<Rational> solution;
    Rational value;
    std::vector<Rational> dual;

    bool operator==(const Optimal&) const = default;
};

/// Farkas certificate of infeasibility: one multiplier per certificate_rows()
/// entry. Multipliers on inequality rows are >= 0, equality rows free;
/// aggregating rows (greater_equal rows negated into less_equal form) must
/// cancel every variable and leave a negative right-hand side, i.e. the
/// contradiction 0.x <= rho < 0.
struct Infeasible {
    std::vector<Rational> farkas;

    bool operator==(const Infeasible&) const = default;
};

/// Certificate of unboundedness: a feasible point plus an improving recession
/// direction of the feasible set.
struct Unbounded {
    std::vector<Rational> ray;
    std::vector<Rational> point;

    bool operator==(const Unbounded&) const = default;
};

using LpOutcome = std::variant<Optimal, Infeasible, Unbounded>;

/// Row list a Farkas certificate refers to: the constraint rows in order,
/// then per variable (ascending index) its lower-bound row x_j >= l_j and
/// upper-bound row x_j <= u_j, for the bounds that are present.
struct CertificateRow {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
};

inline void validate_program(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    if (n == 0) {
        throw ValidationError("linear program with zero variables");
    }
    for (const Constraint& row : lp.constraints) {
        if (row.coeffs.size() != n) {
            throw ValidationError("ragged constraint row");
        }
    }
    if (!lp.lower.empty() && lp.lower.size() != n) {
        throw ValidationError("lower bound vector size mismatch");
    }
    if (!lp.upper.empty() && lp.upper.size() != n) {
        throw ValidationError("upper bound vector size mismatch");
    }
}

inline std::vector<CertificateRow> certificate_rows(const LinearProgram& lp) {
    validate_program(lp);
    const std::size_t n = lp.num_vars();
    std::vector<CertificateRow> rows;
    for (const Constraint& row : lp.constraints) {
        rows.push_back(CertificateRow{row.coeffs, row.relation, row.rhs});
    }
    const auto unit = [n](std::size_t j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        return e;
    };
    for (std::size_t j = 0; j < n; ++j) {
        if (!lp.lower.empty() && lp.lower[j]) {
            rows.push_back(CertificateRow{unit(j), Relation::greater_equal, *lp.lower[j]});
        }
        if (!lp.upper.empty() && lp.upper[j]) {
            rows.push_back(CertificateRow{unit(j), Relation::less_equal, *lp.upper[j]});
        }
    }
    return rows;
}

namespace detail {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    }
    return acc;
}

// Standard-equality-form translation of a LinearProgram:
//   min cz . z   s.t.   A z = b,  z >= 0,  b >= 0
// Free variables are split, lower-bounded variables shifted, upper-only
// variables reflected; a variable with both bounds is shifted to its lower
// bound and its upper bound becomes an extra row. The bookkeeping below maps
// SEF rows, columns, and duals back to the original program.
struct Sef {
    std::size_t n_struct = 0;
    std::size_t n_slack = 0;
    std::size_t n_rows = 0;

    std::vector<std::vector<Rational>> rows;  // n_rows x (n_struct + n_slack)
    std::vector<Rational> rhs;                // >= 0 after sign flips
    std::vector<Rational> cost;               // phase-2 cost over struct cols

    // column origin: x_var receives sign * z_col
    struct Col {
        std::size_t var;
        int sign;
    };
    std::vector<Col> cols;            // per structural column
    std::vector<Rational> shift;      // per original variable

    struct RowMeta {
        std::size_t cert_row;   // certificate_rows() index this row came from
        Relation relation;      // relation of that certificate row
        int eps;                // +-1 scaling applied to make rhs nonnegative
    };
    std::vector<RowMeta> meta;

    std::vector<std::size_t> cert_lb;  // per var: certificate row of x_j >= l_j
    std::vector<std::size_t> cert_ub;  // per var: certificate row of x_j <= u_j
    std::size_t n_cert_rows = 0;
};

inline Sef build_sef(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.constraints.size();
    const bool maximize = lp.sense == Sense::maximize;

    const auto lower_of = [&](std::size_t j) -> const std::optional<Rational>& {
        static const std::optional<Rational> none;
        return lp.lower.empty() ? none : lp.lower[j];
    };
    const auto upper_of = [&](std::size_t j) -> const std::optional<Rational>& {
        static const std::optional<Rational> none;
        return lp.upper.empty() ? none : lp.upper[j];
    };

    Sef sef;
    sef.shift.assign(n, Rational(0));
    sef.cert_lb.assign(n, npos);
    sef.cert_ub.assign(n, npos);

    // Certificate row layout: constraints, then bound rows per variable.
    std::size_t cert = m;
    for (std::size_t j = 0; j < n; ++j) {
        if (lower_of(j)) sef.cert_lb[j] = cert++;
        if (upper_of(j)) sef.cert_ub[j] = cert++;
    }
    sef.n_cert_rows = cert;

    // Structural columns.
    std::vector<std::size_t> col_a(n, npos);  // primary column of variable j
    std::vector<std::size_t> col_b(n, npos);  // negative part of a free variable
    for (std::size_t j = 0; j < n; ++j) {
        const auto& lo = lower_of(j);
        const auto& hi = upper_of(j);
        if (lo) {
            sef.shift[j] = *lo;
            col_a[j] = sef.cols.size();
            sef.cols.push_back(Sef::Col{j, +1});
        } else if (hi) {
            sef.shift[j] = *hi;
            col_a[j] = sef.cols.size();
            sef.cols.push_back(Sef::Col{j, -1});
        } else {
            col_a[j] = sef.cols.size();
            sef.cols.push_back(Sef::Col{j, +1});
            col_b[j] = sef.cols.size();
            sef.cols.push_back(Sef::Col{j, -1});
        }
    }
    sef.n_struct = sef.cols.size();

    sef.cost.assign(sef.n_struct, Rational(0));
    for (std::size_t col = 0; col < sef.n_struct; ++col) {
        Rational cj = lp.objective[sef.cols[col].var];
        if (maximize) cj = -cj;
        sef.cost[col] = sef.cols[col].sign > 0 ? cj : Rational(-cj);
    }

    // Rows: constraints, then upper-bound rows of doubly bounded variables.
    struct PendingRow {
        std::vector<Rational> coeffs;  // over structural columns
        Relation relation;
        Rational rhs;
        std::size_t cert_row;
    };
    std::vector<PendingRow> pending;
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint& row = lp.constraints[i];
        PendingRow p;
        p.coeffs.assign(sef.n_struct, Rational(0));
        Rational rhs = row.rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (row.coeffs[j] == 0) continue;
            rhs -= row.coeffs[j] * sef.shift[j];
            p.coeffs[col_a[j]] += sef.cols[col_a[j]].sign * row.coeffs[j];
            if (col_b[j] != npos) {
                p.coeffs[col_b[j]] += sef.cols[col_b[j]].sign * row.coeffs[j];
            }
        }
        p.relation = row.relation;
        p.rhs = std::move(rhs);
        p.cert_row = i;
        pending.push_back(std::move(p));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (lower_of(j) && upper_of(j)) {
            PendingRow p;
            p.coeffs.assign(sef.n_struct, Rational(0));
            p.coeffs[col_a[j]] = 1;
            p.relation = Relation::less_equal;
            p.rhs = *upper_of(j) - *lower_of(j);
            p.cert_row = sef.cert_ub[j];
            pending.push_back(std::move(p));
        }
    }

    // Slack columns, then sign flips for nonnegative rhs.
    sef.n_rows = pending.size();
    sef.n_slack = 0;
    for (const PendingRow& p : pending) {
        if (p.relation != Relation::equal) ++sef.n_slack;
    }
    const std::size_t width = sef.n_struct + sef.n_slack;
    std::size_t next_slack = sef.n_struct;
    for (PendingRow& p : pending) {
        std::vector<Rational> full(width, Rational(0));
        for (std::size_t c = 0; c < sef.n_struct; ++c) full[c] = std::move(p.coeffs[c]);
        if (p.relation == Relation::less_equal) {
            full[next_slack++] = 1;
        } else if (p.relation == Relation::greater_equal) {
            full[next_slack++] = -1;
        }
        int eps = 1;
        if (p.rhs < 0) {
            eps = -1;
            for (Rational& v : full) v = -v;
            p.rhs = -p.rhs;
        }
        sef.rows.push_back(std::move(full));
        sef.rhs.push_back(std::move(p.rhs));
        sef.meta.push_back(Sef::RowMeta{p.cert_row, p.relation, eps});
    }
    return sef;
}

// Dense simplex tableau with an explicit artificial block (one artificial per
// row; the block doubles as B^{-1}, so duals read off the artificials'
// reduced costs). Bland's least-index rule on entering and leaving columns
// guarantees termination.
class SimplexTableau {
  public:
    explicit SimplexTableau(const Sef& sef)
        : n_real_(sef.n_struct + sef.n_slack),
          n_cols_(n_real_ + sef.n_rows),
          n_rows_(sef.n_rows) {
        a_.assign(n_rows_, std::vector<Rational>(n_cols_, Rational(0)));
        rhs_ = sef.rhs;
        basis_.resize(n_rows_);
        allowed_.assign(n_cols_, true);
        for (std::size_t i = 0; i < n_rows_; ++i) {
            for (std::size_t c = 0; c < n_real_; ++c) a_[i][c] = sef.rows[i][c];
            a_[i][n_real_ + i] = 1;
            basis_[i] = n_real_ + i;
        }
    }

    std::size_t n_real() const { return n_real_; }
    std::size_t n_rows() const { return n_rows_; }
    std::size_t artificial(std::size_t row) const { return n_real_ + row; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const Rational& rhs(std::size_t row) const { return rhs_[row]; }
    const Rational& entry(std::size_t row, std::size_t col) const { return a_[row][col]; }
    const Rational& reduced_cost(std::size_t col) const { return red_[col]; }
    const Rational& objective() const { return obj_; }

    void begin_phase(const std::vector<Rational>& cost) {
        cost_ = cost;
        red_ = cost;
        obj_ = 0;
        for (std::size_t i = 0; i < n_rows_; ++i) {
            const Rational& cb = cost_[basis_[i]];
            if (cb == 0) continue;
            obj_ += cb * rhs_[i];
            for (std::size_t c = 0; c < n_cols_; ++c) {
                if (a_[i][c] != 0) red_[c] -= cb * a_[i][c];
            }
        }
    }

    void forbid(std::size_t col) { allowed_[col] = false; }

    // Runs Bland pivots to optimality; returns the entering column of an
    // unbounded direction instead when one is found.
    std::optional<std::size_t> run() {
        for (;;) {
            std::size_t enter = npos;
            for (std::size_t c = 0; c < n_cols_; ++c) {
                if (allowed_[c] && red_[c] < 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == npos) return std::nullopt;
            std::size_t leave = npos;
            Rational best;
            for (std::size_t i = 0; i < n_rows_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / a_[i][enter];
                if (leave == npos || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == npos) return enter;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational pv = a_[row][col];
        for (Rational& v : a_[row]) v /= pv;
        rhs_[row] /= pv;
        for (std::size_t i = 0; i < n_rows_; ++i) {
            if (i == row || a_[i][col] == 0) continue;
            const Rational factor = a_[i][col];
            for (std::size_t c = 0; c < n_cols_; ++c) {
                if (a_[row][c] != 0) a_[i][c] -= factor * a_[row][c];
            }
            rhs_[i] -= factor * rhs_[row];
        }
        if (red_[col] != 0) {
            const Rational factor = red_[col];
            for (std::size_t c = 0; c < n_cols_; ++c) {
                if (a_[row][c] != 0) red_[c] -= factor * a_[row][c];
            }
            obj_ += factor * rhs_[row];
        }
        basis_[row] = col;
    }

  private:
    std::size_t n_real_;
    std::size_t n_cols_;
    std::size_t n_rows_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> rhs_;
    std::vector<Rational> red_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    std::vector<char> allowed_;
    Rational obj_;
};

// Farkas extraction: with y the phase-1 duals of the SEF rows and
// t_e := y_k eps_k per certificate row e, the certificate assigns
// -t_e to less_equal/equal rows and +t_e to greater_equal rows; whatever
// coefficient mass v_j the constraint aggregation leaves on variable j is
// cancelled through j's bound rows (nonnegativity of those multipliers is
// forced by the phase-1 optimality conditions).
inline std::vector<Rational> extract_farkas(const LinearProgram& lp, const Sef& sef,
                                            const std::vector<Rational>& y_sef) {
    const std::size_t n = lp.num_vars();
    std::vector<Rational> farkas(sef.n_cert_rows, Rational(0));
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t k = 0; k < sef.n_rows; ++k) {
        const Sef::RowMeta& meta = sef.meta[k];
        const Rational t = y_sef[k] * meta.eps;
        if (t == 0) continue;
        farkas[meta.cert_row] = meta.relation == Relation::greater_equal ? t : Rational(-t);
        if (meta.cert_row < lp.constraints.size()) {
            const std::vector<Rational>& row = lp.constraints[meta.cert_row].coeffs;
            for (std::size_t j = 0; j < n; ++j) {
                if (row[j] != 0) v[j] += t * row[j];
            }
        } else {
            // upper-bound row of a doubly bounded variable: coefficient e_j
            for (std::size_t j = 0; j < n; ++j) {
                if (sef.cert_ub[j] == meta.cert_row) {
                    v[j] += t;
                    break;
                }
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        if (sef.cert_lb[j] != npos && v[j] < 0) {
            farkas[sef.cert_lb[j]] += -v[j];
        } else if (sef.cert_ub[j] != npos && v[j] > 0) {
            farkas[sef.cert_ub[j]] += v[j];
        } else {
            throw InternalError("farkas extraction left uncancelled coefficient");
        }
    }
    return farkas;
}

}  // namespace detail

/// Counters for auditing every solve with an independent certificate check;
/// used by the acceptance suite, off by default.
namespace lp_audit {
inline std::atomic<bool> enabled{false};
inline std::atomic<std::uint64_t> outcomes{0};
inline std::atomic<std::uint64_t> failures{0};
inline void reset(bool on) {
    enabled.store(on);
    outcomes.store(0);
    failures.store(0);
}
}  // namespace lp_audit

inline bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome);

/// Two-phase primal simplex on an exact rational tableau. Returns exactly one
/// of Optimal/Infeasible/Unbounded with its certificate populated; the result
/// is deterministic for a fixed input (Bland's least-index pivot rule).
inline LpOutcome solve_lp(const LinearProgram& lp) {
    validate_program(lp);
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.constraints.size();
    const bool maximize = lp.sense == Sense::maximize;

    const detail::Sef sef = detail::build_sef(lp);
    detail::SimplexTableau tab(sef);

    // Phase 1: minimize the sum of artificials.
    {
        std::vector<Rational> cost(tab.n_real() + tab.n_rows(), Rational(0));
        for (std::size_t i = 0; i < tab.n_rows(); ++i) cost[tab.artificial(i)] = 1;
        tab.begin_phase(cost);
        if (tab.run().has_value()) {
            throw InternalError("phase 1 of the simplex cannot be unbounded");
        }
    }

    LpOutcome result = Infeasible{};
    if (tab.objective() > 0) {
        // y_k = c_art - reduced cost of the k-th artificial column.
        std::vector<Rational> y(tab.n_rows());
        for (std::size_t k = 0; k < tab.n_rows(); ++k) {
            y[k] = Rational(1) - tab.reduced_cost(tab.artificial(k));
        }
        result = Infeasible{detail::extract_farkas(lp, sef, y)};
    } else {
        // Drive basic artificials out where possible; rows that cannot be
        // pivoted are redundant and stay inert (all-zero on real columns).
        for (std::size_t i = 0; i < tab.n_rows(); ++i) {
            if (tab.basis()[i] < tab.n_real()) continue;
            for (std::size_t c = 0; c < tab.n_real(); ++c) {
                if (tab.entry(i, c) != 0) {
                    tab.pivot(i, c);
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < tab.n_rows(); ++i) tab.forbid(tab.artificial(i));

        // Phase 2 with the real (minimization-normalized) objective.
        std::vector<Rational> cost(tab.n_real() + tab.n_rows(), Rational(0));
        for (std::size_t c = 0; c < sef.n_struct; ++c) cost[c] = sef.cost[c];
        tab.begin_phase(cost);
        const std::optional<std::size_t> unbounded_col = tab.run();

        std::vector<Rational> z(tab.n_real(), Rational(0));
        for (std::size_t i = 0; i < tab.n_rows(); ++i) {
            if (tab.basis()[i] < tab.n_real()) z[tab.basis()[i]] = tab.rhs(i);
        }
        const auto to_x = [&](const std::vector<Rational>& zv, bool with_shift) {
            std::vector<Rational> x(n, Rational(0));
            if (with_shift) x = sef.shift;
            for (std::size_t c = 0; c < sef.n_struct; ++c) {
                if (zv[c] == 0) continue;
                if (sef.cols[c].sign > 0) {
                    x[sef.cols[c].var] += zv[c];
                } else {
                    x[sef.cols[c].var] -= zv[c];
                }
            }
            return x;
        };

        if (unbounded_col.has_value()) {
            std::vector<Rational> ray_z(tab.n_real(), Rational(0));
            ray_z[*unbounded_col] = 1;
            for (std::size_t i = 0; i < tab.n_rows(); ++i) {
                if (tab.basis()[i] < tab.n_real()) {
                    ray_z[tab.basis()[i]] = -tab.entry(i, *unbounded_col);
                }
            }
            result = Unbounded{to_x(ray_z, false), to_x(z, true)};
        } else {
            std::vector<Rational> x = to_x(z, true);
            Rational value = detail::dot(lp.objective, x);
            std::vector<Rational> dual(m, Rational(0));
            for (std::size_t k = 0; k < tab.n_rows(); ++k) {
                const detail::Sef::RowMeta& meta = sef.meta[k];
                if (meta.cert_row >= m) continue;
                Rational y_k = -tab.reduced_cost(tab.artificial(k));
                Rational t = y_k * meta.eps;
                dual[meta.cert_row] = maximize ? Rational(-t) : t;
            }
            result = Optimal{std::move(x), std::move(value), std::move(dual)};
        }
    }

    if (lp_audit::enabled.load(std::memory_order_relaxed)) {
        lp_audit::outcomes.fetch_add(1, std::memory_order_relaxed);
        if (!verify_certificate(lp, result)) {
            lp_audit::failures.fetch_add(1, std::memory_order_relaxed);
        }
    }
    return result;
}

namespace detail {

inline bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs) {
    switch (rel) {
        case Relation::less_equal: return lhs <= rhs;
        case Relation::equal: return lhs == rhs;
        case Relation::greater_equal: return lhs >= rhs;
    }
    return false;
}

inline bool point_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
    for (const Constraint& row : lp.constraints) {
        if (!relation_holds(dot(row.coeffs, x), row.relation, row.rhs)) return false;
    }
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (!lp.lower.empty() && lp.lower[j] && x[j] < *lp.lower[j]) return false;
        if (!lp.upper.empty() && lp.upper[j] && x[j] > *lp.upper[j]) return false;
    }
    return true;
}

inline bool verify_optimal(const LinearProgram& lp, const Optimal& opt) {
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.constraints.size();
    if (opt.solution.size() != n || opt.dual.size() != m) return false;
    if (!point_feasible(lp, opt.solution)) return false;
    if (dot(lp.objective, opt.solution) != opt.value) return false;

    // Normalize to minimization and check dual feasibility plus a zero gap.
    const bool maximize = lp.sense == Sense::maximize;
    std::vector<Rational> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = maximize ? Rational(-opt.dual[i]) : opt.dual[i];
    const Rational primal = maximize ? Rational(-opt.value) : opt.value;

    for (std::size_t i = 0; i < m; ++i) {
        if (lp.constraints[i].relation == Relation::less_equal && y[i] > 0) return false;
        if (lp.constraints[i].relation == Relation::greater_equal && y[i] < 0) return false;
    }
    Rational dual_value(0);
    for (std::size_t i = 0; i < m; ++i) {
        if (y[i] != 0) dual_value += y[i] * lp.constraints[i].rhs;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational d = maximize ? Rational(-lp.objective[j]) : lp.objective[j];
        for (std::size_t i = 0; i < m; ++i) {
            if (y[i] != 0 && lp.constraints[i].coeffs[j] != 0) {
                d -= y[i] * lp.constraints[i].coeffs[j];
            }
        }
        const bool has_lower = !lp.lower.empty() && lp.lower[j].has_value();
        const bool has_upper = !lp.upper.empty() && lp.upper[j].has_value();
        if (d > 0) {
            if (!has_lower) return false;
            dual_value += d * *lp.lower[j];
        } else if (d < 0) {
            if (!has_upper) return false;
            dual_value += d * *lp.upper[j];
        }
    }
    return dual_value == primal;
}

inline bool verify_infeasible(const LinearProgram& lp, const Infeasible& inf) {
    const std::vector<CertificateRow> rows = certificate_rows(lp);
    if (inf.farkas.size() != rows.size()) return false;
    const std::size_t n = lp.num_vars();
    std::vector<Rational> w(n, Rational(0));
    Rational rho(0);
    for (std::size_t e = 0; e < rows.size(); ++e) {
        const Rational& mu = inf.farkas[e];
        if (mu == 0) continue;
        if (rows[e].relation != Relation::equal && mu < 0) return false;
        const Rational s = rows[e].relation == Relation::greater_equal ? -mu : mu;
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[e].coeffs[j] != 0) w[j] += s * rows[e].coeffs[j];
        }
        rho += s * rows[e].rhs;
    }
    for (const Rational& wj : w) {
        if (wj != 0) return false;
    }
    return rho < 0;
}

inline bool verify_unbounded(const LinearProgram& lp, const Unbounded& unb) {
    const std::size_t n = lp.num_vars();
    if (unb.ray.size() != n || unb.point.size() != n) return false;
    bool nonzero = false;
    for (const Rational& r : unb.ray) nonzero = nonzero || r != 0;
    if (!nonzero) return false;
    if (!point_feasible(lp, unb.point)) return false;
    for (const Constraint& row : lp.constraints) {
        const Rational d = dot(row.coeffs, unb.ray);
        if (!relation_holds(d, row.relation, Rational(0))) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!lp.lower.empty() && lp.lower[j] && unb.ray[j] < 0) return false;
        if (!lp.upper.empty() && lp.upper[j] && unb.ray[j] > 0) return false;
    }
    const Rational gain = dot(lp.objective, unb.ray);
    return lp.sense == Sense::minimize ? gain < 0 : gain > 0;
}

}  // namespace detail

/// Checks an outcome against its program by direct exact arithmetic, sharing
/// no state with the solver: feasibility plus an exactly zero duality gap for
/// Optimal, a Farkas refutation for Infeasible, and a feasible improving ray
/// for Unbounded. Returns false on any violation.
inline bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome) {
    try {
        if (const auto* opt = std::get_if<Optimal>(&outcome)) {
            return detail::verify_optimal(lp, *opt);
        }
        if (const auto* inf = std::get_if<Infeasible>(&outcome)) {
            return detail::verify_infeasible(lp, *inf);
        }
        if (const auto* unb = std::get_if<Unbounded>(&outcome)) {
            return detail::verify_unbounded(lp, *unb);
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

}  // namespace affprox
