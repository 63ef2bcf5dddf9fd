#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "affprox/envelope.hpp"
#include "affprox/generate.hpp"
#include "affprox/prng.hpp"

using namespace affprox;

namespace {

Rational rat(long long n, long long d = 1) { return make_rational(n, d); }

Point pt(std::initializer_list<long long> coords) {
    std::vector<Rational> v;
    for (long long c : coords) v.emplace_back(c);
    return Point(std::move(v));
}

struct Fixture {
    Polytope c;
    AffineMap phi;
    AffineFunctional f;
};

Fixture square_projection() {
    return {Polytope(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}),
            AffineMap({{rat(1), rat(0)}}, pt({0})),
            AffineFunctional({rat(0), rat(1)}, rat(0))};
}

Fixture identity_on_segment() {
    return {Polytope(1, {pt({0}), pt({1})}),
            AffineMap({{rat(1)}}, pt({0})),
            AffineFunctional({rat(1)}, rat(0))};
}

Fixture triangle_sum() {
    return {Polytope(2, {pt({0, 0}), pt({2, 0}), pt({0, 2})}),
            AffineMap({{rat(1), rat(1)}}, pt({0})),
            AffineFunctional({rat(1), rat(0)}, rat(0))};
}

Point sample_codomain_point(const Polytope& image, SplitMix64& rng) {
    std::vector<Rational> weights(image.generators.size());
    Rational total(0);
    for (auto& w : weights) {
        w = Rational(rng.next_in(0, 9));
        total += w;
    }
    if (total == 0) {
        weights[0] = 1;
        total = 1;
    }
    for (auto& w : weights) w /= total;
    return convex_combination(image, weights);
}

}  // namespace

TEST_CASE("square projection envelopes") {
    const Fixture fx = square_projection();
    const Point y({rat(1, 2)});

    const EnvelopeValue lower = lower_envelope(fx.c, fx.phi, fx.f, y);
    CHECK(lower.value == 0);
    CHECK(lower.witness == Point({rat(1, 2), rat(0)}));

    const EnvelopeValue upper = upper_envelope(fx.c, fx.phi, fx.f, y);
    CHECK(upper.value == 1);
    CHECK(upper.witness == Point({rat(1, 2), rat(1)}));

    CHECK(fiber_oscillation(fx.c, fx.phi, fx.f, y) == 1);
    CHECK(fiber_oscillation(fx.c, fx.phi, fx.f, pt({0})) == 1);
    CHECK(fiber_oscillation(fx.c, fx.phi, fx.f, pt({1})) == 1);
}

TEST_CASE("identity map gives singleton fibers") {
    const Fixture fx = identity_on_segment();
    const Point y({rat(2, 7)});
    CHECK(lower_envelope(fx.c, fx.phi, fx.f, y).value == rat(2, 7));
    CHECK(upper_envelope(fx.c, fx.phi, fx.f, y).value == rat(2, 7));
    CHECK(lower_envelope(fx.c, fx.phi, fx.f, y).witness == y);
    CHECK(fiber_oscillation(fx.c, fx.phi, fx.f, y) == 0);
}

TEST_CASE("triangle fiber at y = 1") {
    // the fiber is the segment from (1,0) to (0,1); enumerate its endpoints
    const Fixture fx = triangle_sum();
    const Point end_a = pt({1, 0});
    const Point end_b = pt({0, 1});
    const Rational expected_min =
        std::min(eval_functional(fx.f, end_a), eval_functional(fx.f, end_b));
    const Rational expected_max =
        std::max(eval_functional(fx.f, end_a), eval_functional(fx.f, end_b));
    CHECK(expected_min == 0);
    CHECK(expected_max == 1);

    const Point y({rat(1)});
    const EnvelopeValue lower = lower_envelope(fx.c, fx.phi, fx.f, y);
    const EnvelopeValue upper = upper_envelope(fx.c, fx.phi, fx.f, y);
    CHECK(lower.value == expected_min);
    CHECK(upper.value == expected_max);
    CHECK(lower.witness == end_b);
    CHECK(upper.witness == end_a);
    CHECK(fiber_oscillation(fx.c, fx.phi, fx.f, y) == 1);
}

TEST_CASE("empty fibers are an error distinct from dimension mismatch") {
    const Fixture fx = square_projection();
    CHECK_THROWS_AS(lower_envelope(fx.c, fx.phi, fx.f, pt({2})), EmptyFiberError);
    CHECK_THROWS_AS(upper_envelope(fx.c, fx.phi, fx.f, pt({-1})), EmptyFiberError);
    CHECK_THROWS_AS(lower_envelope(fx.c, fx.phi, fx.f, pt({0, 0})), DimensionError);
}

TEST_CASE("envelope witnesses carry valid multipliers") {
    const Fixture fx = triangle_sum();
    const Point y({rat(1, 3)});
    const EnvelopeValue lower = lower_envelope(fx.c, fx.phi, fx.f, y);
    Rational total(0);
    for (const Rational& m : lower.multipliers) {
        CHECK(m >= 0);
        total += m;
    }
    CHECK(total == 1);
    CHECK(convex_combination(fx.c, lower.multipliers) == lower.witness);
    CHECK(eval_map(fx.phi, lower.witness) == y);
    CHECK(eval_functional(fx.f, lower.witness) == lower.value);
}

TEST_CASE("gap constant on the square projection") {
    const Fixture fx = square_projection();
    const GapCertificate gap = gap_constant(fx.c, fx.phi, fx.f);
    CHECK(gap.c == 1);
    CHECK(eval_map(fx.phi, gap.x) == gap.y);
    CHECK(eval_map(fx.phi, gap.x_prime) == gap.y);
    CHECK(eval_functional(fx.f, gap.x) - eval_functional(fx.f, gap.x_prime) == 1);
}

TEST_CASE("gap constant vanishes for injective maps") {
    const Fixture fx = identity_on_segment();
    const GapCertificate gap = gap_constant(fx.c, fx.phi, fx.f);
    CHECK(gap.c == 0);
    CHECK(eval_functional(fx.f, gap.x) == eval_functional(fx.f, gap.x_prime));
}

TEST_CASE("gap constant on the triangle, against a vertex-pair brute force") {
    const Fixture fx = triangle_sum();

    // brute force over generator pairs with equal image; on this instance the
    // maximum oscillation is attained at such a pair
    Rational best(0);
    for (const Point& a : fx.c.generators) {
        for (const Point& b : fx.c.generators) {
            if (eval_map(fx.phi, a) == eval_map(fx.phi, b)) {
                const Rational spread =
                    eval_functional(fx.f, a) - eval_functional(fx.f, b);
                if (spread > best) best = spread;
            }
        }
    }
    CHECK(best == 2);

    const GapCertificate gap = gap_constant(fx.c, fx.phi, fx.f);
    CHECK(gap.c == 2);
    CHECK(gap.x == pt({2, 0}));
    CHECK(gap.x_prime == pt({0, 2}));
    CHECK(gap.y == pt({2}));
}

TEST_CASE("envelope convexity, concavity and duality on random instances") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t dim_c = 1 + trial % 3;
        const std::size_t dim_d = std::min<std::size_t>(dim_c, 1 + trial % 2);
        const Instance inst = generate_instance(1000 + trial, dim_c, dim_d, 4 + trial % 4);
        const Polytope image = image_polytope(inst.map, inst.domain);
        const AffineFunctional neg = -inst.functional;

        for (int round = 0; round < 6; ++round) {
            const Point y1 = sample_codomain_point(image, rng);
            const Point y2 = sample_codomain_point(image, rng);
            const Rational t = Rational(rng.next_in(0, 8)) / 8;

            std::vector<Rational> mix(y1.dim());
            for (std::size_t i = 0; i < mix.size(); ++i) {
                mix[i] = t * y1.coords[i] + (1 - t) * y2.coords[i];
            }
            const Point ym(std::move(mix));

            const Rational low1 = lower_envelope(inst.domain, inst.map, inst.functional, y1).value;
            const Rational low2 = lower_envelope(inst.domain, inst.map, inst.functional, y2).value;
            const Rational lowm = lower_envelope(inst.domain, inst.map, inst.functional, ym).value;
            CHECK(lowm <= t * low1 + (1 - t) * low2);

            const Rational up1 = upper_envelope(inst.domain, inst.map, inst.functional, y1).value;
            const Rational up2 = upper_envelope(inst.domain, inst.map, inst.functional, y2).value;
            const Rational upm = upper_envelope(inst.domain, inst.map, inst.functional, ym).value;
            CHECK(upm >= t * up1 + (1 - t) * up2);

            // duality of the envelopes
            CHECK(upm == -lower_envelope(inst.domain, inst.map, neg, ym).value);

            // oscillation is nonnegative and dominated by the gap constant
            CHECK(upm - lowm >= 0);
        }

        const GapCertificate gap = gap_constant(inst.domain, inst.map, inst.functional);
        for (int round = 0; round < 4; ++round) {
            const Point y = sample_codomain_point(image, rng);
            CHECK(fiber_oscillation(inst.domain, inst.map, inst.functional, y) <= gap.c);
        }
    }
}
