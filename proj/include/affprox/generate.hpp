#pragma once

#include <cstdint>
#include <vector>

#include "affprox/errors.hpp"
#include "affprox/geometry.hpp"
#include "affprox/instance.hpp"
#include "affprox/prng.hpp"

namespace affprox {

/// Deterministic pseudo-random instance with integer data in [-5, 5].
/// D is left implicit (the image of C), so the map is surjective by
/// construction. A fixed seed always produces the same instance, and hence a
/// byte-identical file through serialize_instance.
inline Instance generate_instance(std::uint64_t seed, std::size_t dim_c, std::size_t dim_d,
                                  std::size_t n_vertices) {
    if (dim_c < 1 || dim_d < 1) {
        throw ValidationError("generator dimensions must be positive");
    }
    if (dim_d > dim_c) {
        throw ValidationError("generator requires dim_D <= dim_C");
    }
    if (n_vertices < dim_c + 1) {
        throw ValidationError("generator requires at least dim_C + 1 vertices");
    }

    SplitMix64 rng(seed);
    const auto small_int = [&rng] { return Rational(rng.next_in(-5, 5)); };

    std::vector<Point> vertices;
    vertices.reserve(n_vertices);
    for (std::size_t i = 0; i < n_vertices; ++i) {
        std::vector<Rational> coords(dim_c);
        for (std::size_t c = 0; c < dim_c; ++c) coords[c] = small_int();
        vertices.push_back(Point(std::move(coords)));
    }

    std::vector<std::vector<Rational>> matrix(dim_d, std::vector<Rational>(dim_c));
    for (std::size_t r = 0; r < dim_d; ++r) {
        for (std::size_t c = 0; c < dim_c; ++c) matrix[r][c] = small_int();
    }
    std::vector<Rational> offset(dim_d);
    for (std::size_t r = 0; r < dim_d; ++r) offset[r] = small_int();

    std::vector<Rational> coeffs(dim_c);
    for (std::size_t c = 0; c < dim_c; ++c) coeffs[c] = small_int();
    const Rational constant = small_int();

    Instance inst;
    inst.dim_c = dim_c;
    inst.dim_d = dim_d;
    inst.domain = Polytope(dim_c, std::move(vertices));
    inst.map = AffineMap(std::move(matrix), Point(std::move(offset)));
    inst.functional = AffineFunctional(std::move(coeffs), constant);
    return inst;
}

}  // namespace affprox
