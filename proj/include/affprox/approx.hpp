#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "affprox/envelope.hpp"
#include "affprox/errors.hpp"
#include "affprox/geometry.hpp"
#include "affprox/lp.hpp"
#include "affprox/rational.hpp"

// Every condition this module imposes over all of C or D is reduced to
// finitely many conditions at the generators of C. That reduction is exact:
// (1) an affine g satisfies g(sum lambda_i v_i) = sum lambda_i g(v_i) for
//     convex multipliers, so g <= t holds on conv(V) iff it holds on V, and
//     sup |g| over conv(V) is attained at a generator;
// (2) for surjective phi, "h.phi >= f - t on C" is the same as
//     "h >= f_upper - t on D": every y in D is phi(x) for some x, and h.phi
//     is constant on each fiber, so the fiber supremum of f transfers.
// The Chebyshev and sandwich programs below are therefore exact, not
// discretizations.

namespace affprox {

struct GeneratorResidual {
    Point generator;
    Rational residual;  // f(v) - h0(phi(v))

    bool operator==(const GeneratorResidual&) const = default;
};

/// Full output of the solver: the optimal distance d, the gap constant c with
/// its witness pair, an optimal h0, and the per-generator residuals whose
/// maximum magnitude equals d exactly.
struct BestApproximation {
    AffineFunctional h0;
    Rational d;
    Rational c;
    GapCertificate gap_witness;
    std::vector<GeneratorResidual> residuals;
};

struct ChebyshevResult {
    Rational distance;
    AffineFunctional h;
};

/// Exact supremum norm of f - h.phi over C: the difference is affine, so the
/// maximum magnitude over the generators is the norm.
inline Rational norm_of_difference(const Polytope& c, const AffineMap& phi,
                                   const AffineFunctional& f, const AffineFunctional& h) {
    detail::check_instance_dims(c, phi, f);
    if (h.dim() != phi.codomain_dim()) {
        throw DimensionError("candidate functional does not match the map codomain");
    }
    Rational best(0);
    for (const Point& v : c.generators) {
        const Rational r = rational_abs(eval_functional(f, v) -
                                        eval_functional(h, eval_map(phi, v)));
        if (r > best) best = r;
    }
    return best;
}

/// min over affine h of max_v |f(v) - h(phi(v))|, as the linear program
///   minimize t  s.t.  -t <= f(v) - (a.phi(v) + b) <= t  per generator v.
inline ChebyshevResult chebyshev_distance(const Polytope& c, const AffineMap& phi,
                                          const AffineFunctional& f) {
    detail::check_instance_dims(c, phi, f);
    const std::size_t dd = phi.codomain_dim();
    std::vector<Rational> objective(dd + 2, Rational(0));
    objective[dd + 1] = 1;

    LinearProgram lp(Sense::minimize, std::move(objective));
    for (const Point& v : c.generators) {
        const Point w = eval_map(phi, v);
        const Rational fv = eval_functional(f, v);
        std::vector<Rational> above(dd + 2);
        std::vector<Rational> below(dd + 2);
        for (std::size_t r = 0; r < dd; ++r) above[r] = below[r] = w.coords[r];
        above[dd] = below[dd] = 1;
        above[dd + 1] = -1;
        below[dd + 1] = 1;
        lp.add_constraint(std::move(above), Relation::less_equal, fv);
        lp.add_constraint(std::move(below), Relation::greater_equal, fv);
    }
    lp.set_lower(dd + 1, Rational(0));

    LpOutcome outcome = solve_lp(lp);
    auto* opt = std::get_if<Optimal>(&outcome);
    if (opt == nullptr) {
        throw InternalError("Chebyshev program must have an optimum");
    }
    std::vector<Rational> coeffs(opt->solution.begin(), opt->solution.begin() + dd);
    return ChebyshevResult{std::move(opt->value),
                           AffineFunctional(std::move(coeffs), std::move(opt->solution[dd]))};
}

/// An affine h0 with f(v) - c/2 <= h0(phi(v)) <= f(v) + c/2 at every
/// generator, which by the reduction above is the sandwich
/// f_upper - c/2 <= h0 <= f_lower + c/2 on all of D. Feasibility is
/// guaranteed when c is the exact gap constant; an infeasible program means
/// the caller passed an inconsistent c and is reported as an internal error.
inline AffineFunctional sandwich_affine(const Polytope& c, const AffineMap& phi,
                                        const AffineFunctional& f, const Rational& gap_c) {
    detail::check_instance_dims(c, phi, f);
    const std::size_t dd = phi.codomain_dim();
    const Rational half = gap_c / 2;

    LinearProgram lp(Sense::minimize, std::vector<Rational>(dd + 1, Rational(0)));
    for (const Point& v : c.generators) {
        const Point w = eval_map(phi, v);
        const Rational fv = eval_functional(f, v);
        std::vector<Rational> row(dd + 1);
        for (std::size_t r = 0; r < dd; ++r) row[r] = w.coords[r];
        row[dd] = 1;
        lp.add_constraint(row, Relation::less_equal, fv + half);
        lp.add_constraint(std::move(row), Relation::greater_equal, fv - half);
    }

    LpOutcome outcome = solve_lp(lp);
    if (std::holds_alternative<Infeasible>(outcome)) {
        throw InternalError("sandwich program infeasible: inconsistent gap constant");
    }
    auto* opt = std::get_if<Optimal>(&outcome);
    if (opt == nullptr) {
        throw InternalError("sandwich program cannot be unbounded");
    }
    std::vector<Rational> coeffs(opt->solution.begin(), opt->solution.begin() + dd);
    return AffineFunctional(std::move(coeffs), std::move(opt->solution[dd]));
}

/// End-to-end solve: the gap constant c, a sandwiched h0, and the Chebyshev
/// distance d are computed independently and must agree exactly (d = c/2 and
/// max residual = d); both identities are asserted, so a successful return is
/// self-verifying.
inline BestApproximation best_approximation(const Polytope& c, const AffineMap& phi,
                                            const AffineFunctional& f) {
    detail::check_instance_dims(c, phi, f);

    GapCertificate gap = gap_constant(c, phi, f);
    AffineFunctional h0 = sandwich_affine(c, phi, f, gap.c);
    const ChebyshevResult cheb = chebyshev_distance(c, phi, f);

    if (Rational(2) * cheb.distance != gap.c) {
        throw InternalError("Chebyshev distance disagrees with half the gap constant");
    }

    BestApproximation result;
    result.h0 = std::move(h0);
    result.d = cheb.distance;
    result.c = gap.c;
    result.gap_witness = std::move(gap);
    Rational max_residual(0);
    for (const Point& v : c.generators) {
        Rational r = eval_functional(f, v) - eval_functional(result.h0, eval_map(phi, v));
        if (rational_abs(r) > max_residual) max_residual = rational_abs(r);
        result.residuals.push_back(GeneratorResidual{v, std::move(r)});
    }
    if (max_residual != result.d) {
        throw InternalError("sandwiched h0 does not attain the Chebyshev distance");
    }
    return result;
}

/// Certificate check requiring no linear programming: residual maximum equals
/// d, the gap witness pair maps to a common image with spread exactly c, and
/// d = c/2. False on any violation.
inline bool verify_solution(const Polytope& c, const AffineMap& phi,
                            const AffineFunctional& f, const BestApproximation& result) {
    try {
        if (result.h0.dim() != phi.codomain_dim()) return false;
        if (result.residuals.size() != c.generators.size()) return false;
        Rational max_residual(0);
        for (std::size_t i = 0; i < c.generators.size(); ++i) {
            const Point& v = c.generators[i];
            const Rational r =
                eval_functional(f, v) - eval_functional(result.h0, eval_map(phi, v));
            if (result.residuals[i].generator != v || result.residuals[i].residual != r) {
                return false;
            }
            if (rational_abs(r) > max_residual) max_residual = rational_abs(r);
        }
        if (max_residual != result.d) return false;

        const GapCertificate& gap = result.gap_witness;
        if (gap.c != result.c || gap.c < 0) return false;
        if (eval_map(phi, gap.x) != gap.y || eval_map(phi, gap.x_prime) != gap.y) return false;
        if (eval_functional(f, gap.x) - eval_functional(f, gap.x_prime) != gap.c) return false;

        return Rational(2) * result.d == result.c;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace affprox
