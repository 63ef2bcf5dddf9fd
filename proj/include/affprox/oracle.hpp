#pragma once

#include <cstddef>
#include <vector>

#include "affprox/envelope.hpp"
#include "affprox/errors.hpp"
#include "affprox/geometry.hpp"
#include "affprox/rational.hpp"

// Independent cross-check for the exact solver. The search below never
// touches the simplex machinery: h is parameterized by its values at an
// affinely independent subset of image points (not by coefficients), the
// min-max residual is evaluated directly, and the only numerics is a nested
// grid refinement. The returned value is an upper bound on the true distance
// for any depth, since it is attained by a concrete affine h.

namespace affprox {
namespace detail {

inline std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] -= factor * rows[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

// Solves the consistent full-column-rank system A theta = b exactly.
inline std::vector<Rational> solve_consistent(std::vector<std::vector<Rational>> a,
                                              std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::vector<std::size_t> pivot_row(cols, static_cast<std::size_t>(-1));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) {
            throw InternalError("barycentric system lost column rank");
        }
        std::swap(a[rank], a[pivot]);
        std::swap(b[rank], b[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rational factor = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
            b[r] -= factor * b[rank];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r) {
        if (b[r] != 0) throw InternalError("barycentric system is inconsistent");
    }
    std::vector<Rational> theta(cols);
    for (std::size_t col = 0; col < cols; ++col) {
        theta[col] = b[pivot_row[col]] / a[pivot_row[col]][col];
    }
    return theta;
}

}  // namespace detail

/// Grid-search upper bound on the best-approximation distance, converging to
/// it on small well-conditioned instances. Restricted to codomain dimension
/// at most 2; `depth` counts grid passes (one coarse pass plus depth-1
/// refinements around the incumbent).
inline Rational oracle_distance(const Polytope& c, const AffineMap& phi,
                                const AffineFunctional& f, int depth) {
    detail::check_instance_dims(c, phi, f);
    if (phi.codomain_dim() > 2) {
        throw ValidationError("oracle supports dim_D <= 2 instances only");
    }
    if (depth < 1) {
        throw ValidationError("oracle depth must be at least 1");
    }

    const std::size_t n_gens = c.generators.size();
    std::vector<Point> images;
    std::vector<Rational> f_values;
    images.reserve(n_gens);
    f_values.reserve(n_gens);
    for (const Point& v : c.generators) {
        images.push_back(eval_map(phi, v));
        f_values.push_back(eval_functional(f, v));
    }

    // Affinely independent anchor points among the image generators.
    std::vector<Point> anchors{images.front()};
    std::vector<std::vector<Rational>> diffs;
    for (const Point& g : images) {
        if (anchors.size() == phi.codomain_dim() + 1) break;
        std::vector<Rational> diff(g.dim());
        for (std::size_t r = 0; r < g.dim(); ++r) {
            diff[r] = g.coords[r] - anchors.front().coords[r];
        }
        std::vector<std::vector<Rational>> candidate = diffs;
        candidate.push_back(diff);
        if (detail::matrix_rank(candidate) == candidate.size()) {
            diffs.push_back(std::move(diff));
            anchors.push_back(g);
        }
    }
    const std::size_t k = anchors.size() - 1;
    const std::size_t axes = k + 1;

    // Barycentric weights of every image generator with respect to the
    // anchors: h(phi(v)) = sum_a weight[a] * h(anchor_a).
    std::vector<std::vector<Rational>> column_major(phi.codomain_dim(),
                                                    std::vector<Rational>(k));
    for (std::size_t r = 0; r < phi.codomain_dim(); ++r) {
        for (std::size_t j = 0; j < k; ++j) column_major[r][j] = diffs[j][r];
    }
    std::vector<std::vector<Rational>> weights(n_gens, std::vector<Rational>(axes));
    for (std::size_t i = 0; i < n_gens; ++i) {
        std::vector<Rational> rhs(phi.codomain_dim());
        for (std::size_t r = 0; r < phi.codomain_dim(); ++r) {
            rhs[r] = images[i].coords[r] - anchors.front().coords[r];
        }
        std::vector<Rational> theta =
            k == 0 ? std::vector<Rational>{} : detail::solve_consistent(column_major, rhs);
        Rational rest(0);
        for (std::size_t j = 0; j < k; ++j) {
            weights[i][j + 1] = theta[j];
            rest += theta[j];
        }
        weights[i][0] = Rational(1) - rest;
    }

    Rational f_min = f_values.front();
    Rational f_max = f_values.front();
    for (const Rational& v : f_values) {
        if (v < f_min) f_min = v;
        if (v > f_max) f_max = v;
    }

    constexpr int grid_points = 21;
    std::vector<Rational> lo(axes, f_min - 1);
    std::vector<Rational> hi(axes, f_max + 1);
    std::vector<Rational> best(axes, Rational(0));
    Rational best_value;
    bool have_best = false;

    for (int pass = 0; pass < depth; ++pass) {
        std::vector<Rational> step(axes);
        for (std::size_t a = 0; a < axes; ++a) {
            step[a] = (hi[a] - lo[a]) / (grid_points - 1);
        }
        std::vector<int> idx(axes, 0);
        std::vector<Rational> w(axes);
        for (;;) {
            for (std::size_t a = 0; a < axes; ++a) w[a] = lo[a] + step[a] * idx[a];
            Rational value(0);
            for (std::size_t i = 0; i < n_gens; ++i) {
                Rational residual = f_values[i];
                for (std::size_t a = 0; a < axes; ++a) {
                    if (weights[i][a] != 0 && w[a] != 0) residual -= weights[i][a] * w[a];
                }
                if (residual < 0) residual = -residual;
                if (residual > value) value = residual;
            }
            if (!have_best || value < best_value) {
                best_value = value;
                best = w;
                have_best = true;
            }
            std::size_t a = 0;
            while (a < axes && ++idx[a] == grid_points) idx[a++] = 0;
            if (a == axes) break;
        }
        for (std::size_t a = 0; a < axes; ++a) {
            lo[a] = best[a] - step[a];
            hi[a] = best[a] + step[a];
        }
    }
    return best_value;
}

}  // namespace affprox
