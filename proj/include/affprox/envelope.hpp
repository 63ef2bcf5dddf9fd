#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "affprox/errors.hpp"
#include "affprox/geometry.hpp"
#include "affprox/lp.hpp"
#include "affprox/rational.hpp"

namespace affprox {

/// Exact extremum of f over one fiber, with the attaining point and its
/// convex multipliers over the generators of C.
struct EnvelopeValue {
    Rational value;
    Point witness;
    std::vector<Rational> multipliers;
};

/// c = max { f(x) - f(x') : x, x' in C, phi(x) = phi(x') } together with an
/// attaining pair and its common image.
struct GapCertificate {
    Rational c;
    Point x;
    Point x_prime;
    Point y;
};

namespace detail {

inline void check_instance_dims(const Polytope& c, const AffineMap& phi,
                                const AffineFunctional& f) {
    if (phi.domain_dim() != c.dim) {
        throw DimensionError("map domain does not match the polytope");
    }
    if (f.dim() != c.dim) {
        throw DimensionError("functional does not match the polytope");
    }
}

// min/max of sum lambda_i f(v_i) over the simplex multipliers of C pinned to
// the fiber phi(x) = y.
inline EnvelopeValue fiber_extremum(const Polytope& c, const AffineMap& phi,
                                    const AffineFunctional& f, const Point& y,
                                    Sense sense) {
    check_instance_dims(c, phi, f);
    if (y.dim() != phi.codomain_dim()) {
        throw DimensionError("query point does not match the map codomain");
    }
    const std::size_t k = c.generators.size();
    std::vector<Point> images;
    images.reserve(k);
    for (const Point& v : c.generators) images.push_back(eval_map(phi, v));

    std::vector<Rational> objective(k);
    for (std::size_t i = 0; i < k; ++i) objective[i] = eval_functional(f, c.generators[i]);

    LinearProgram lp(sense, std::move(objective));
    for (std::size_t r = 0; r < phi.codomain_dim(); ++r) {
        std::vector<Rational> row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = images[i].coords[r];
        lp.add_constraint(std::move(row), Relation::equal, y.coords[r]);
    }
    lp.add_constraint(std::vector<Rational>(k, Rational(1)), Relation::equal, Rational(1));
    for (std::size_t i = 0; i < k; ++i) lp.set_lower(i, Rational(0));

    LpOutcome outcome = solve_lp(lp);
    if (std::holds_alternative<Infeasible>(outcome)) {
        throw EmptyFiberError("query point lies outside the image of C");
    }
    auto* opt = std::get_if<Optimal>(&outcome);
    if (opt == nullptr) {
        throw InternalError("fiber program cannot be unbounded on a polytope");
    }

    EnvelopeValue env;
    env.value = std::move(opt->value);
    env.multipliers = std::move(opt->solution);
    env.witness = convex_combination(c, env.multipliers);
    if (eval_map(phi, env.witness) != y || eval_functional(f, env.witness) != env.value) {
        throw InternalError("fiber witness fails its defining identities");
    }
    return env;
}

}  // namespace detail

/// Lower envelope value f_lower(y) = inf of f over the fiber of y.
inline EnvelopeValue lower_envelope(const Polytope& c, const AffineMap& phi,
                                    const AffineFunctional& f, const Point& y) {
    return detail::fiber_extremum(c, phi, f, y, Sense::minimize);
}

/// Upper envelope value f_upper(y) = sup of f over the fiber of y.
inline EnvelopeValue upper_envelope(const Polytope& c, const AffineMap& phi,
                                    const AffineFunctional& f, const Point& y) {
    return detail::fiber_extremum(c, phi, f, y, Sense::maximize);
}

/// Oscillation r(y) = f_upper(y) - f_lower(y) of f over the fiber of y.
inline Rational fiber_oscillation(const Polytope& c, const AffineMap& phi,
                                  const AffineFunctional& f, const Point& y) {
    const Rational r = upper_envelope(c, phi, f, y).value - lower_envelope(c, phi, f, y).value;
    if (r < 0) throw InternalError("negative fiber oscillation");
    return r;
}

/// Largest oscillation over the whole codomain, as one coupled program over
/// two multiplier blocks tied to a common image: maximizing
/// f(x) - f(x') over phi(x) = phi(x') reaches sup_y r(y) directly, with no
/// outer search over y.
inline GapCertificate gap_constant(const Polytope& c, const AffineMap& phi,
                                   const AffineFunctional& f) {
    detail::check_instance_dims(c, phi, f);
    const std::size_t k = c.generators.size();
    std::vector<Point> images;
    images.reserve(k);
    for (const Point& v : c.generators) images.push_back(eval_map(phi, v));

    std::vector<Rational> objective(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        objective[i] = eval_functional(f, c.generators[i]);
        objective[k + i] = -objective[i];
    }

    LinearProgram lp(Sense::maximize, std::move(objective));
    for (std::size_t r = 0; r < phi.codomain_dim(); ++r) {
        std::vector<Rational> row(2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = images[i].coords[r];
            row[k + i] = -images[i].coords[r];
        }
        lp.add_constraint(std::move(row), Relation::equal, Rational(0));
    }
    std::vector<Rational> ones_first(2 * k, Rational(0));
    std::vector<Rational> ones_second(2 * k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        ones_first[i] = 1;
        ones_second[k + i] = 1;
    }
    lp.add_constraint(std::move(ones_first), Relation::equal, Rational(1));
    lp.add_constraint(std::move(ones_second), Relation::equal, Rational(1));
    for (std::size_t i = 0; i < 2 * k; ++i) lp.set_lower(i, Rational(0));

    LpOutcome outcome = solve_lp(lp);
    auto* opt = std::get_if<Optimal>(&outcome);
    if (opt == nullptr) {
        throw InternalError("gap program must have an optimum on a polytope");
    }

    std::vector<Rational> lambda(opt->solution.begin(), opt->solution.begin() + k);
    std::vector<Rational> mu(opt->solution.begin() + k, opt->solution.end());
    GapCertificate gap;
    gap.c = std::move(opt->value);
    gap.x = convex_combination(c, lambda);
    gap.x_prime = convex_combination(c, mu);
    gap.y = eval_map(phi, gap.x);
    if (gap.c < 0 || eval_map(phi, gap.x_prime) != gap.y ||
        eval_functional(f, gap.x) - eval_functional(f, gap.x_prime) != gap.c) {
        throw InternalError("gap witness fails its defining identities");
    }
    return gap;
}

}  // namespace affprox
