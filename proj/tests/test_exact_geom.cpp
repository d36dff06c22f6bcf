#include <doctest.h>

#include "equiproj/errors.hpp"
#include "equiproj/families.hpp"
#include "equiproj/lattice.hpp"
#include "equiproj/minkowski.hpp"
#include "oracles.hpp"

using namespace equiproj;

TEST_CASE("rationals parse, reduce and print canonically") {
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4/2") == Rat(-2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(format_rat(parse_rat("-10/4")) == "-5/2");
    CHECK_THROWS_AS(parse_rat("10/-4"), ParseError);
    CHECK(format_rat(Rat(12)) == "12");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("abc"), ParseError);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat("2/"), ParseError);
}

TEST_CASE("primitive and canonical line representatives") {
    CHECK(primitive(ivec(0, -2, 4)) == ivec(0, -1, 2));
    CHECK(canonical_line(ivec(0, -2, 4)) == ivec(0, 1, -2));
    CHECK(canonical_line(Vec3(Rat(1, 2), Rat(1, 3), Rat(0))) == ivec(3, 2, 0));
    CHECK(primitive(ivec(0, 0, 0)).is_zero());
    CHECK(canonical_line(ivec(2, 4, 6)) == ivec(1, 2, 3));
}

TEST_CASE("orientation") {
    Vec3 o(0, 0, 0), x(1, 0, 0), y(0, 1, 0);
    CHECK(orientation(o, x, y, ivec(0, 0, 1)) == 1);
    CHECK(orientation(o, x, y, ivec(0, 0, -1)) == -1);
    CHECK(orientation(o, x, y, ivec(5, 7, 0)) == 0);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto p = oracle::random_points(rng, 4, 5);
        int s = orientation(p[0], p[1], p[2], p[3]);
        CHECK(orientation(p[1], p[0], p[2], p[3]) == -s);
        CHECK(orientation(p[0], p[2], p[1], p[3]) == -s);
        CHECK(orientation(p[0], p[1], p[3], p[2]) == -s);
        CHECK(orientation(p[3], p[1], p[2], p[0]) == -s);
    }
}

TEST_CASE("hull of the cube and the tetrahedron") {
    Polytope3 c = unit_cube();
    CHECK(c.dimension() == 3);
    CHECK(c.f_vector() == std::array<std::size_t, 4>{8, 12, 6, 1});
    Polytope3 t = regular_tetrahedron();
    CHECK(t.f_vector() == std::array<std::size_t, 4>{4, 6, 4, 1});
}

TEST_CASE("interior points are dropped") {
    std::vector<Vec3> pts{ivec(0, 0, 0), ivec(4, 0, 0), ivec(0, 4, 0), ivec(0, 0, 4), ivec(1, 1, 1), ivec(1, 1, 0)};
    Polytope3 p = hull3(pts);
    CHECK(p.vertices().size() == 4);
    auto brute = oracle::brute_hull_3d(pts);
    CHECK(std::set<Vec3>(p.vertices().begin(), p.vertices().end()) == brute.vertices);
}

TEST_CASE("hull agrees with brute-force facet enumeration") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 60; ++t) {
        // Small coordinates force many coplanar and collinear configurations.
        auto pts = oracle::random_full_points(rng, 6 + t % 9, t % 2 ? 2 : 6);
        Polytope3 p = hull3(pts);
        auto brute = oracle::brute_hull_3d(pts);
        REQUIRE(p.dimension() == 3);
        CHECK(std::set<Vec3>(p.vertices().begin(), p.vertices().end()) == brute.vertices);
        CHECK(oracle::facet_point_sets(p) == brute.facets);
    }
}

TEST_CASE("structural invariants on random hulls") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        auto pts = oracle::random_full_points(rng, 5 + t % 12, 4);
        Polytope3 p = hull3(pts);
        auto f = p.f_vector();
        CHECK(static_cast<long>(f[0]) - static_cast<long>(f[1]) + static_cast<long>(f[2]) == 2);

        for (const auto& fs : p.edge_facets()) CHECK(fs.size() == 2);
        // Strict support inequality for every facet.
        for (std::size_t fi = 0; fi < p.facet_count(); ++fi) {
            const Vec3& n = p.facet_normals()[fi];
            const auto& cyc = p.facet_cycles()[fi];
            Rat c = dot(n, p.vertex(cyc[0]));
            std::set<std::size_t> on(cyc.begin(), cyc.end());
            for (std::size_t v = 0; v < p.vertices().size(); ++v) {
                if (on.count(v))
                    CHECK(dot(n, p.vertex(v)) == c);
                else
                    CHECK(dot(n, p.vertex(v)) < c);
            }
            // Counterclockwise seen from outside.
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const Vec3& a = p.vertex(cyc[i]);
                const Vec3& b = p.vertex(cyc[(i + 1) % cyc.size()]);
                const Vec3& d = p.vertex(cyc[(i + 2) % cyc.size()]);
                CHECK(sign(dot(cross(b - a, d - b), n)) > 0);
            }
        }
        // Face inclusion matches vertex inclusion: every facet edge is a face.
        for (const auto& cyc : p.facet_cycles())
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                std::vector<std::size_t> e{cyc[i], cyc[(i + 1) % cyc.size()]};
                std::sort(e.begin(), e.end());
                auto fi = p.find_face(e);
                REQUIRE(fi.has_value());
                CHECK(p.face(*fi).dim == 1);
            }
        // Intersection of two facets is empty or a face.
        for (std::size_t a = 0; a < p.facet_count(); ++a)
            for (std::size_t b = a + 1; b < p.facet_count(); ++b) {
                const auto& va = p.face(p.facet_face(a)).vertices;
                const auto& vb = p.face(p.facet_face(b)).vertices;
                std::vector<std::size_t> both;
                std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(both));
                if (!both.empty()) CHECK(p.find_face(both).has_value());
            }
        // Idempotence.
        Polytope3 again = hull3(p.vertices());
        CHECK(again.vertices() == p.vertices());
        CHECK(again.faces() == p.faces());
    }
}

TEST_CASE("face_in_direction and normal cones against brute-force maximization") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 25; ++t) {
        Polytope3 p = hull3(oracle::random_full_points(rng, 8, 5));
        for (int k = 0; k < 10; ++k) {
            Vec3 y = oracle::random_points(rng, 1, 4)[0];
            if (y.is_zero()) continue;
            std::size_t f = p.face_in_direction(y);
            Rat best = dot(y, p.vertex(0));
            for (const Vec3& v : p.vertices()) best = std::max(best, dot(y, v));
            std::vector<std::size_t> argmax;
            for (std::size_t v = 0; v < p.vertices().size(); ++v)
                if (dot(y, p.vertex(v)) == best) argmax.push_back(v);
            CHECK(p.face(f).vertices == argmax);
        }
        // The relative-interior witness of N(F) selects exactly F.
        for (std::size_t f = 0; f + 1 < p.faces().size(); ++f)
            CHECK(p.face_in_direction(normal_cone(p, f).relint_witness()) == f);
        CHECK(normal_cone(p, p.self_face()).relint_witness().is_zero());
    }
}

TEST_CASE("lower-dimensional hulls") {
    Polytope3 pt = hull3(std::vector<Vec3>{ivec(1, 2, 3), ivec(1, 2, 3)});
    CHECK(pt.dimension() == 0);
    CHECK(pt.faces().size() == 1);

    Polytope3 seg = hull3(std::vector<Vec3>{ivec(0, 0, 0), ivec(1, 2, 3), ivec(2, 4, 6)});
    CHECK(seg.dimension() == 1);
    CHECK(seg.vertices() == std::vector<Vec3>{ivec(0, 0, 0), ivec(2, 4, 6)});
    CHECK(seg.faces().size() == 3);
    CHECK(seg.edge_facets()[0].empty());

    Polytope3 hex = zonotope(GeneratorSet::make({ivec(1, 0, 0), ivec(0, 1, 0), ivec(1, 1, 0)}));
    CHECK(hex.dimension() == 2);
    auto f = hex.f_vector();
    CHECK(f[0] == 6);
    CHECK(f[0] == f[1]);
    for (const auto& fs : hex.edge_facets()) CHECK(fs.size() == 1);
    // In-plane outward edge normals point away from the centroid.
    Vec3 c = hex.centroid(hex.self_face());
    for (std::size_t e = 0; e < hex.edges().size(); ++e)
        CHECK(dot(hex.edge_normals()[e], hex.vertex(hex.edges()[e].a) - c) > 0);

    CHECK_THROWS_AS(hull3(std::vector<Vec3>{}), PreconditionError);
}

TEST_CASE("plane basis is integral, orthogonal and positively oriented") {
    for (const Vec3& u : {ivec(1, 0, 0), ivec(0, 0, 1), ivec(1, 2, 3), ivec(-4, 1, 1), ivec(5, 5, 5)}) {
        auto [b1, b2] = plane_basis(u);
        CHECK(is_integral(b1));
        CHECK(is_integral(b2));
        CHECK(dot(u, b1) == 0);
        CHECK(dot(u, b2) == 0);
        CHECK(dot(b1, b2) == 0);
        CHECK(sign(det3(u, b1, b2)) > 0);
    }
}

TEST_CASE("face lattice isomorphism") {
    Polytope3 cube = unit_cube();
    // The linear map e3 -> e1 + e2 + e3 sends the cube onto this zonotope, an
    // explicit bijection.
    Polytope3 z = zonotope(GeneratorSet::make({ivec(1, 0, 0), ivec(0, 1, 0), ivec(1, 1, 1)}));
    Polytope3 mapped = oracle::transformed(cube, {ivec(1, 0, 1), ivec(0, 1, 1), ivec(0, 0, 1)});
    CHECK(mapped.vertices() == z.vertices());
    CHECK(face_lattice_isomorphic(cube, z));
    CHECK(oracle::brute_isomorphic(cube, z));
    CHECK_FALSE(face_lattice_isomorphic(cube, regular_tetrahedron()));

    Polytope3 rotated = oracle::transformed(pyritohedron(Rat(1, 2)), oracle::rational_rotation(), ivec(3, -1, 2));
    CHECK(face_lattice_isomorphic(pyritohedron(Rat(1, 2)), rotated));
    CHECK(canonical_code(pyritohedron(Rat(1, 2))) == canonical_code(rotated));

    // Mirror images are isomorphic as lattices.
    Polytope3 mirror = oracle::transformed(pyramid(5), {ivec(-1, 0, 0), ivec(0, 1, 0), ivec(0, 0, 1)});
    CHECK(face_lattice_isomorphic(pyramid(5), mirror));

    CHECK_FALSE(face_lattice_isomorphic(prism(3), pyramid(4)));
    CHECK_FALSE(face_lattice_isomorphic(prism(5), pyramid(6)));
}

TEST_CASE("isomorphism agrees with vertex-permutation search on small hulls") {
    std::mt19937_64 rng(5);
    std::vector<Polytope3> pool;
    while (pool.size() < 24) {
        Polytope3 p = hull3(oracle::random_full_points(rng, 7, 3));
        if (p.vertices().size() <= 7) pool.push_back(p);
    }
    int positives = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            bool fast = face_lattice_isomorphic(pool[i], pool[j]);
            CHECK(fast == oracle::brute_isomorphic(pool[i], pool[j]));
            CHECK(fast == (canonical_code(pool[i]) == canonical_code(pool[j])));
            if (fast && i != j) ++positives;
        }
    CHECK(positives > 0);
}

TEST_CASE("isomorphism search honours its budget") {
    CHECK_THROWS_AS(face_lattice_isomorphic(prism(8), prism(8), 5), ResourceLimit);
}
