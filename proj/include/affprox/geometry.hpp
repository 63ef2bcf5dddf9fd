#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "affprox/errors.hpp"
#include "affprox/lp.hpp"
#include "affprox/rational.hpp"

namespace affprox {

struct Point {
    std::vector<Rational> coords;

    Point() = default;
    explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    bool operator==(const Point&) const = default;
};

/// Convex hull of a nonempty generator list in a fixed ambient dimension.
/// Generators may be redundant; instances are accepted as given.
struct Polytope {
    std::size_t dim = 0;
    std::vector<Point> generators;

    Polytope() = default;
    Polytope(std::size_t ambient_dim, std::vector<Point> gens)
        : dim(ambient_dim), generators(std::move(gens)) {
        if (dim == 0) throw ValidationError("polytope with ambient dimension zero");
        if (generators.empty()) throw ValidationError("polytope without generators");
        for (const Point& g : generators) {
            if (g.dim() != dim) {
                throw DimensionError("generator dimension does not match polytope");
            }
        }
    }

    bool operator==(const Polytope&) const = default;
};

/// x -> matrix.x + offset
struct AffineMap {
    std::vector<std::vector<Rational>> matrix;  // codomain_dim rows, domain_dim cols
    Point offset;

    AffineMap() = default;
    AffineMap(std::vector<std::vector<Rational>> m, Point off)
        : matrix(std::move(m)), offset(std::move(off)) {
        if (matrix.empty() || matrix.front().empty()) {
            throw ValidationError("affine map with an empty matrix");
        }
        for (const auto& row : matrix) {
            if (row.size() != matrix.front().size()) {
                throw DimensionError("ragged affine map matrix");
            }
        }
        if (offset.dim() != matrix.size()) {
            throw DimensionError("affine map offset does not match matrix rows");
        }
    }

    std::size_t domain_dim() const { return matrix.front().size(); }
    std::size_t codomain_dim() const { return matrix.size(); }

    bool operator==(const AffineMap&) const = default;
};

/// x -> coeffs.x + constant
struct AffineFunctional {
    std::vector<Rational> coeffs;
    Rational constant;

    AffineFunctional() = default;
    AffineFunctional(std::vector<Rational> c, Rational k)
        : coeffs(std::move(c)), constant(std::move(k)) {
        if (coeffs.empty()) throw ValidationError("affine functional without coefficients");
    }

    std::size_t dim() const { return coeffs.size(); }
    bool operator==(const AffineFunctional&) const = default;
};

inline Point eval_map(const AffineMap& phi, const Point& x) {
    if (x.dim() != phi.domain_dim()) {
        throw DimensionError("eval_map: point does not match the map domain");
    }
    std::vector<Rational> out(phi.codomain_dim());
    for (std::size_t r = 0; r < phi.codomain_dim(); ++r) {
        Rational acc = phi.offset.coords[r];
        for (std::size_t c = 0; c < phi.domain_dim(); ++c) {
            if (phi.matrix[r][c] != 0 && x.coords[c] != 0) {
                acc += phi.matrix[r][c] * x.coords[c];
            }
        }
        out[r] = std::move(acc);
    }
    return Point(std::move(out));
}

inline Rational eval_functional(const AffineFunctional& f, const Point& x) {
    if (x.dim() != f.dim()) {
        throw DimensionError("eval_functional: point does not match the functional");
    }
    Rational acc = f.constant;
    for (std::size_t c = 0; c < f.dim(); ++c) {
        if (f.coeffs[c] != 0 && x.coords[c] != 0) acc += f.coeffs[c] * x.coords[c];
    }
    return acc;
}

/// h . phi as a functional on the domain of phi.
inline AffineFunctional compose(const AffineFunctional& h, const AffineMap& phi) {
    if (h.dim() != phi.codomain_dim()) {
        throw DimensionError("compose: functional does not match the map codomain");
    }
    std::vector<Rational> coeffs(phi.domain_dim(), Rational(0));
    for (std::size_t c = 0; c < phi.domain_dim(); ++c) {
        for (std::size_t r = 0; r < phi.codomain_dim(); ++r) {
            if (h.coeffs[r] != 0 && phi.matrix[r][c] != 0) {
                coeffs[c] += h.coeffs[r] * phi.matrix[r][c];
            }
        }
    }
    Rational constant = h.constant;
    for (std::size_t r = 0; r < phi.codomain_dim(); ++r) {
        if (h.coeffs[r] != 0 && phi.offset.coords[r] != 0) {
            constant += h.coeffs[r] * phi.offset.coords[r];
        }
    }
    return AffineFunctional(std::move(coeffs), std::move(constant));
}

inline AffineFunctional operator+(const AffineFunctional& a, const AffineFunctional& b) {
    if (a.dim() != b.dim()) throw DimensionError("adding functionals of different dimension");
    std::vector<Rational> coeffs(a.dim());
    for (std::size_t c = 0; c < a.dim(); ++c) coeffs[c] = a.coeffs[c] + b.coeffs[c];
    return AffineFunctional(std::move(coeffs), a.constant + b.constant);
}

inline AffineFunctional operator*(const Rational& alpha, const AffineFunctional& f) {
    std::vector<Rational> coeffs(f.dim());
    for (std::size_t c = 0; c < f.dim(); ++c) coeffs[c] = alpha * f.coeffs[c];
    return AffineFunctional(std::move(coeffs), alpha * f.constant);
}

inline AffineFunctional operator-(const AffineFunctional& f) {
    return Rational(-1) * f;
}

/// Sum lambda_i v_i over the polytope's generators; multipliers must be a
/// convex combination (checked for size, not for nonnegativity).
inline Point convex_combination(const Polytope& p, const std::vector<Rational>& multipliers) {
    if (multipliers.size() != p.generators.size()) {
        throw DimensionError("multiplier count does not match generator count");
    }
    std::vector<Rational> coords(p.dim, Rational(0));
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        if (multipliers[i] == 0) continue;
        for (std::size_t c = 0; c < p.dim; ++c) {
            coords[c] += multipliers[i] * p.generators[i].coords[c];
        }
    }
    return Point(std::move(coords));
}

/// Affine images commute with convex hulls, so the image polytope is just the
/// hull of the mapped generators.
inline Polytope image_polytope(const AffineMap& phi, const Polytope& c) {
    if (phi.domain_dim() != c.dim) {
        throw DimensionError("image_polytope: map domain does not match polytope");
    }
    std::vector<Point> gens;
    gens.reserve(c.generators.size());
    for (const Point& g : c.generators) gens.push_back(eval_map(phi, g));
    return Polytope(phi.codomain_dim(), std::move(gens));
}

/// Inside: convex multipliers over the generators reconstructing y.
/// Outside: a functional g with g <= 0 on the polytope and g(y) > 0, read off
/// the Farkas certificate of the membership feasibility program.
struct MembershipResult {
    bool inside = false;
    std::vector<Rational> multipliers;
    std::optional<AffineFunctional> separator;
};

inline MembershipResult membership(const Polytope& p, const Point& y) {
    if (y.dim() != p.dim) {
        throw DimensionError("membership: point does not match polytope dimension");
    }
    const std::size_t k = p.generators.size();
    LinearProgram lp(Sense::minimize, std::vector<Rational>(k, Rational(0)));
    for (std::size_t c = 0; c < p.dim; ++c) {
        std::vector<Rational> row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = p.generators[i].coords[c];
        lp.add_constraint(std::move(row), Relation::equal, y.coords[c]);
    }
    lp.add_constraint(std::vector<Rational>(k, Rational(1)), Relation::equal, Rational(1));
    for (std::size_t i = 0; i < k; ++i) lp.set_lower(i, Rational(0));

    const LpOutcome outcome = solve_lp(lp);
    if (const auto* opt = std::get_if<Optimal>(&outcome)) {
        MembershipResult res;
        res.inside = true;
        res.multipliers = opt->solution;
        return res;
    }
    const auto* inf = std::get_if<Infeasible>(&outcome);
    if (inf == nullptr) {
        throw InternalError("membership program cannot be unbounded");
    }
    std::vector<Rational> coeffs(p.dim);
    for (std::size_t c = 0; c < p.dim; ++c) coeffs[c] = -inf->farkas[c];
    MembershipResult res;
    res.separator = AffineFunctional(std::move(coeffs), Rational(-inf->farkas[p.dim]));
    return res;
}

/// Hull equality via mutual generator membership.
inline bool polytope_equal(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) {
        throw DimensionError("polytope_equal: ambient dimensions differ");
    }
    for (const Point& g : p.generators) {
        if (!membership(q, g).inside) return false;
    }
    for (const Point& g : q.generators) {
        if (!membership(p, g).inside) return false;
    }
    return true;
}

struct SurjectivityResult {
    enum class Failure {
        none,
        image_generator_outside_codomain,  // phi(C) is not contained in D
        codomain_generator_outside_image,  // D is not contained in phi(C)
    };

    bool surjective = false;
    Failure failure = Failure::none;
    std::size_t witness_index = 0;
    std::optional<Point> witness;
};

/// Decides phi(C) = D by checking hull containment both ways; on failure
/// reports the first offending generator and its direction.
inline SurjectivityResult check_surjective(const AffineMap& phi, const Polytope& c,
                                           const Polytope& d) {
    if (phi.domain_dim() != c.dim) {
        throw DimensionError("check_surjective: map domain does not match C");
    }
    if (phi.codomain_dim() != d.dim) {
        throw DimensionError("check_surjective: map codomain does not match D");
    }
    const Polytope image = image_polytope(phi, c);
    for (std::size_t i = 0; i < image.generators.size(); ++i) {
        if (!membership(d, image.generators[i]).inside) {
            SurjectivityResult res;
            res.failure = SurjectivityResult::Failure::image_generator_outside_codomain;
            res.witness_index = i;
            res.witness = image.generators[i];
            return res;
        }
    }
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
        if (!membership(image, d.generators[i]).inside) {
            SurjectivityResult res;
            res.failure = SurjectivityResult::Failure::codomain_generator_outside_image;
            res.witness_index = i;
            res.witness = d.generators[i];
            return res;
        }
    }
    SurjectivityResult res;
    res.surjective = true;
    return res;
}

}  // namespace affprox
