#include <doctest.h>

#include "equiproj/equiprojectivity.hpp"
#include "equiproj/errors.hpp"
#include "equiproj/families.hpp"
#include "equiproj/minkowski.hpp"
#include "oracles.hpp"

using namespace equiproj;

namespace {

std::size_t facet_with_normal(const Polytope3& p, const Vec3& n) {
    for (std::size_t f = 0; f < p.facet_count(); ++f)
        if (p.facet_normals()[f] == n) return f;
    FAIL("no facet with normal " << n);
    return 0;
}

std::size_t edge_between(const Polytope3& p, const Vec3& a, const Vec3& b) {
    for (std::size_t e = 0; e < p.edges().size(); ++e) {
        const Vec3& x = p.vertex(p.edges()[e].a);
        const Vec3& y = p.vertex(p.edges()[e].b);
        if ((x == a && y == b) || (x == b && y == a)) return e;
    }
    FAIL("no edge " << a << " " << b);
    return 0;
}

}  // namespace

TEST_CASE("compensation on the cube") {
    Polytope3 c = unit_cube();
    std::size_t top = facet_with_normal(c, ivec(0, 0, 1));
    std::size_t front = facet_with_normal(c, ivec(0, -1, 0));
    std::size_t back = facet_with_normal(c, ivec(0, 1, 0));
    std::size_t e_front_top = edge_between(c, ivec(0, 0, 1), ivec(1, 0, 1));
    std::size_t e_back_top = edge_between(c, ivec(0, 1, 1), ivec(1, 1, 1));

    // Two x-parallel edges of the top facet.
    CHECK(compensates(c, {e_front_top, top}, {e_back_top, top}));
    // Top edges of the front and back facets: both facets lie below the top plane.
    CHECK(compensates(c, {e_front_top, front}, {e_back_top, back}));
    // Same edge with its two facets: the facets lie on opposite sides.
    CHECK_FALSE(compensates(c, {e_front_top, front}, {e_front_top, top}));
    // Non-parallel edges never compensate.
    std::size_t e_y = edge_between(c, ivec(0, 0, 1), ivec(0, 1, 1));
    CHECK_FALSE(compensates(c, {e_front_top, top}, {e_y, top}));
    CHECK_THROWS_AS(compensates(c, {e_front_top, top}, {e_front_top, top}), PreconditionError);
}

TEST_CASE("no incidence pair of the regular tetrahedron compensates") {
    Polytope3 t = regular_tetrahedron();
    auto inc = incidences(t);
    CHECK(inc.size() == 12);
    int parallel_pairs = 0;
    for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
            const Edge& a = t.edges()[inc[i].edge];
            const Edge& b = t.edges()[inc[j].edge];
            if (inc[i].edge != inc[j].edge &&
                collinear(t.vertex(a.b) - t.vertex(a.a), t.vertex(b.b) - t.vertex(b.a)))
                ++parallel_pairs;
            CHECK_FALSE(compensates(t, inc[i], inc[j]));
        }
    CHECK(parallel_pairs == 0);
    CHECK_FALSE(check_hasan_lubiw(t).has_value());
}

TEST_CASE("matching checker") {
    auto cube = check_hasan_lubiw(unit_cube());
    REQUIRE(cube.has_value());
    CHECK(cube->pairs.size() == 12);
    CHECK(is_valid_pairing(unit_cube(), *cube));
    CHECK(check_hasan_lubiw(prism(5)).has_value());
    CHECK_FALSE(check_hasan_lubiw(pyramid(4)).has_value());
    // A prism over a 12-gon has 24 incidences along its axis.
    CHECK_THROWS_AS(check_hasan_lubiw(prism(12), 16), ResourceLimit);
    CHECK_THROWS_AS(check_hasan_lubiw(hull3(circle_polygon(4))), PreconditionError);
}

TEST_CASE("matching checker agrees with exhaustive matching") {
    std::vector<Polytope3> corpus{unit_cube(), regular_tetrahedron(), prism(3), prism(4), prism(5), pyramid(4),
                                  pyramid(5)};
    std::mt19937_64 rng(41);
    for (int t = 0; t < 12; ++t) corpus.push_back(hull3(oracle::random_full_points(rng, 6, 2)));
    for (const Polytope3& p : corpus) CHECK(check_hasan_lubiw(p).has_value() == oracle::brute_pairing_exists(p));
}

TEST_CASE("aggregated checker") {
    EquiprojectivityReport cube = check_aggregated(unit_cube());
    CHECK(cube.is_equiprojective);
    CHECK(cube.kappa == 6);
    REQUIRE(cube.pairing.has_value());
    CHECK(is_valid_pairing(unit_cube(), *cube.pairing));

    Polytope3 box = zonotope(GeneratorSet::make({ivec(3, 0, 0), ivec(0, 2, 0), ivec(0, 0, 5)}));
    CHECK(check_aggregated(box).kappa == 6);

    EquiprojectivityReport tet = check_aggregated(regular_tetrahedron());
    CHECK_FALSE(tet.is_equiprojective);
    CHECK_FALSE(tet.kappa.has_value());
    CHECK(tet.per_direction.size() == 6);
    for (const auto& [u, c] : tet.per_direction) CHECK(c == DirectionCase::Fail);
    CHECK_THROWS_AS(pairing_from_cones(regular_tetrahedron()), PreconditionError);
    CHECK_THROWS_AS(check_aggregated(hull3(circle_polygon(5))), PreconditionError);
}

TEST_CASE("pyritohedra are not equiprojective") {
    for (const Rat& h : {Rat(1, 2), Rat(3, 5), Rat(618, 1000)}) {
        Polytope3 p = pyritohedron(h);
        CHECK(p.f_vector() == std::array<std::size_t, 4>{20, 30, 12, 1});
        CHECK_FALSE(check_aggregated(p).is_equiprojective);
        CHECK_FALSE(check_hasan_lubiw(p).has_value());
        CHECK(shadow_histogram(p, 300, 5).size() >= 2);
    }
}

TEST_CASE("shadow vertex counts") {
    CHECK(shadow_vertex_count(unit_cube(), ivec(1, 2, 3)) == 6);
    Polytope3 t = regular_tetrahedron();
    CHECK(shadow_vertex_count(t, ivec(1, 2, 4)) == 4);
    CHECK(shadow_vertex_count(t, ivec(10, 10, -9)) == 3);
    CHECK(shadow_vertex_count(t, ivec(1, 1, 10)) == 4);
    // (1,2,3) is orthogonal to the facet normal (1,1,-1).
    try {
        shadow_vertex_count(t, ivec(1, 2, 3));
        FAIL("expected InadmissibleDirection");
    } catch (const InadmissibleDirection& e) {
        CHECK(dot(t.facet_normals()[e.facet], ivec(1, 2, 3)) == 0);
    }
    CHECK_THROWS_AS(shadow_vertex_count(unit_cube(), ivec(1, 0, 0)), InadmissibleDirection);
}

TEST_CASE("shadow counts match explicit projections") {
    std::mt19937_64 rng(8);
    std::vector<Polytope3> corpus{unit_cube(), regular_tetrahedron(), prism(6), pyramid(5), pyritohedron(Rat(1, 3))};
    for (int t = 0; t < 10; ++t) corpus.push_back(hull3(oracle::random_full_points(rng, 9, 5)));
    for (const Polytope3& p : corpus)
        for (int k = 0; k < 15; ++k) {
            Vec3 d = random_admissible_direction(p, rng);
            int s = shadow_vertex_count(p, d);
            CHECK(s == oracle::projected_shadow_vertices(p, d));
            CHECK(s == shadow_vertex_count(p, -d));
            CHECK(s == shadow_vertex_count(p, Rat(7, 3) * d));
        }
}

TEST_CASE("zonotope shadows have twice as many vertices as generators") {
    std::mt19937_64 rng(12);
    for (int n = 3; n <= 6; ++n) {
        Polytope3 z = zonotope(random_generators(static_cast<std::size_t>(n), rng));
        for (int k = 0; k < 20; ++k) CHECK(shadow_vertex_count(z, random_admissible_direction(z, rng)) == 2 * n);
    }
}

TEST_CASE("sampling oracle") {
    CHECK(oracle_equiprojective(unit_cube(), 100, 1) == 6);
    CHECK(oracle_equiprojective(prism(5), 100, 1) == 7);
    CHECK_FALSE(oracle_equiprojective(regular_tetrahedron(), 100, 1).has_value());
    auto h = shadow_histogram(regular_tetrahedron(), 200, 3);
    CHECK(h.count(3) == 1);
    CHECK(h.count(4) == 1);
    CHECK(shadow_histogram(unit_cube(), 50, 9) == shadow_histogram(unit_cube(), 50, 9));
}

TEST_CASE("checkers agree and the cone pairing is valid") {
    std::mt19937_64 rng(77);
    std::vector<Polytope3> corpus;
    for (int m = 3; m <= 8; ++m) {
        corpus.push_back(prism(m));
        corpus.push_back(pyramid(m));
    }
    for (int t = 0; t < 20; ++t) corpus.push_back(hull3(oracle::random_full_points(rng, 5 + t % 8, 3)));
    for (int n = 3; n <= 5; ++n) corpus.push_back(zonotope(random_generators(static_cast<std::size_t>(n), rng)));
    corpus.push_back(odd_equiprojective(9, 4));
    for (const Polytope3& p : corpus) {
        EquiprojectivityReport r = check_aggregated(p);
        CHECK(r.is_equiprojective == check_hasan_lubiw(p).has_value());
        CHECK(r.kappa.has_value() == r.is_equiprojective);
        if (r.is_equiprojective) {
            REQUIRE(r.pairing.has_value());
            CHECK(is_valid_pairing(p, *r.pairing));
            CHECK(oracle_equiprojective(p, 60, 2) == r.kappa);
        }
    }
}

TEST_CASE("invalid pairings are rejected") {
    CompensationPairing pairing = pairing_from_cones(unit_cube());
    REQUIRE(is_valid_pairing(unit_cube(), pairing));
    CompensationPairing missing = pairing;
    missing.pairs.pop_back();
    CHECK_FALSE(is_valid_pairing(unit_cube(), missing));
    const Polytope3 c = unit_cube();
    auto dir = [&](const EdgeFacetIncidence& x) {
        return EdgeDirection::of(c.vertex(c.edges()[x.edge].b) - c.vertex(c.edges()[x.edge].a));
    };
    std::size_t other = 1;
    while (dir(pairing.pairs[other].first) == dir(pairing.pairs[0].first)) ++other;
    CompensationPairing swapped = pairing;
    std::swap(swapped.pairs[0].second, swapped.pairs[other].second);
    CHECK_FALSE(is_valid_pairing(c, swapped));
}
