#include <random>
#include <set>

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "toriclag/families.hpp"
#include "toriclag/polytope.hpp"

using namespace toriclag;
using fixtures::trapezoid;

namespace {

std::set<std::vector<oracle::Frac>> vertex_points(const HalfspacePresentation& p, const EnumerationOptions& o = {}) {
    std::set<std::vector<oracle::Frac>> out;
    for (const auto& v : enumerate_vertices(p, o)) out.insert(fixtures::to_fracs(v.point));
    return out;
}

std::set<std::vector<oracle::Frac>> oracle_vertices(const HalfspacePresentation& p) {
    const auto [normals, b] = fixtures::oracle_input(p);
    return oracle::vertices(normals, b);
}

/// Delta^{d1} x Delta^{d2} written with coordinate simplices.
HalfspacePresentation simplex_product(std::size_t d1, std::size_t d2) {
    const std::size_t k = d1 + d2;
    std::vector<IntVector> normals;
    RatVector b;
    auto block = [&](std::size_t off, std::size_t d) {
        for (std::size_t i = 0; i < d; ++i) {
            IntVector a(k, 0);
            a[off + i] = 1;
            normals.push_back(a);
            b.push_back(0);
        }
        IntVector s(k, 0);
        for (std::size_t i = 0; i < d; ++i) s[off + i] = -1;
        normals.push_back(s);
        b.push_back(1);
    };
    block(0, d1);
    block(d1, d2);
    return HalfspacePresentation::from_normals(normals, b);
}

HalfspacePresentation random_polygon(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> entry(-3, 3);
    std::vector<IntVector> normals{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    RatVector b{2, 2, 2, 2};
    for (int extra = 0; extra < 3; ++extra) {
        long x = entry(rng), y = entry(rng);
        if (x == 0 && y == 0) x = 1;
        normals.push_back({x, y});
        b.push_back(std::uniform_int_distribution<long>(1, 6)(rng));
    }
    return HalfspacePresentation::from_normals(normals, b);
}

}  // namespace

TEST_SUITE("polytope") {
    TEST_CASE("trapezoid vertices") {
        const auto vs = enumerate_vertices(trapezoid(2));
        REQUIRE(vs.size() == 4);
        CHECK(vs[0].point == RatVector{0, 0});
        CHECK(vs[1].point == RatVector{0, 1});
        CHECK(vs[2].point == RatVector{1, 1});
        CHECK(vs[3].point == RatVector{3, 0});
        CHECK(vertex_points(trapezoid(2)) == oracle_vertices(trapezoid(2)));
    }

    TEST_CASE("standard simplex vertices") {
        const auto vs = enumerate_vertices(fixtures::standard_simplex());
        REQUIRE(vs.size() == 3);
        CHECK(vertex_points(fixtures::standard_simplex()) == oracle_vertices(fixtures::standard_simplex()));
    }

    TEST_CASE("displayed simplex-product presentation (10,4,2) has 35 vertices") {
        const auto p = simplex_product_displayed_presentation(10, 4, 2);
        const auto vs = enumerate_vertices(p);
        CHECK(vs.size() == 35);
        CHECK(vertex_points(p) == oracle_vertices(p));
    }

    TEST_CASE("primal and Gale enumeration agree") {
        std::vector<HalfspacePresentation> cases{trapezoid(2), trapezoid(5), fixtures::pentagon(),
                                                 simplex_product_displayed_presentation(8, 3, 1),
                                                 simplex_product_presentation(10, 4, 2), stretched_presentation(2, 4)};
        std::mt19937_64 rng(11);
        for (int i = 0; i < 20; ++i) cases.push_back(random_polygon(rng));
        for (const auto& p : cases) {
            EnumerationOptions primal, gale;
            primal.method = VertexMethod::primal;
            gale.method = VertexMethod::gale;
            const auto a = enumerate_vertices(p, primal);
            const auto b = enumerate_vertices(p, gale);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(a[i].point == b[i].point);
                CHECK(a[i].active_set == b[i].active_set);
            }
        }
    }

    TEST_CASE("random polygons: vertices against the brute-force oracle") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 40; ++i) {
            const auto p = random_polygon(rng);
            CHECK(vertex_points(p) == oracle_vertices(p));
            for (const auto& v : enumerate_vertices(p))
                for (const auto& s : p.slack(v.point)) CHECK(s >= 0);
        }
    }

    TEST_CASE("subset budget guard") {
        EnumerationOptions tiny;
        tiny.subset_budget = 2;
        tiny.method = VertexMethod::primal;
        CHECK_THROWS_AS(enumerate_vertices(fixtures::pentagon(), tiny), Error);
    }

    TEST_CASE("trapezoid report") {
        const auto r = presentation_report(trapezoid(2));
        CHECK(r.bounded);
        CHECK(r.simple);
        CHECK(r.generic);
        CHECK(r.irredundant());
        CHECK(r.vertex_count == 4);
    }

    TEST_CASE("duplicated facet is redundant") {
        const auto p = HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}}, {0, 0, 1, 1, 0});
        const auto r = presentation_report(p);
        CHECK(r.redundant_facets == std::vector<std::size_t>{4});
        CHECK(vertex_points(p) == vertex_points(p.without({4})));
    }

    TEST_CASE("loose facet is redundant and removal keeps the vertices") {
        const auto p = HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}}, {0, 0, 1, 1, 5});
        const auto r = presentation_report(p);
        CHECK(r.redundant_facets == std::vector<std::size_t>{4});
        CHECK(vertex_points(p) == vertex_points(p.without(r.redundant_facets)));
    }

    TEST_CASE("quadrant is unbounded") {
        const auto p = HalfspacePresentation::from_normals({{1, 0}, {0, 1}}, {0, 0});
        CHECK_FALSE(presentation_report(p).bounded);
        CHECK(has_recession_direction(p));
    }

    TEST_CASE("strip is unbounded") {
        const auto p = HalfspacePresentation::from_normals({{0, 1}, {0, -1}, {1, 0}}, {0, 1, 0});
        CHECK_FALSE(presentation_report(p).bounded);
        CHECK(enumerate_vertices(p).size() == 2);
    }

    TEST_CASE("empty polytope has no vertices") {
        const auto p = HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {-1, -1}}, {0, 0, -1});
        CHECK(enumerate_vertices(p).empty());
    }

    TEST_CASE("simple and generic flags") {
        // a pyramid apex meets four facets
        const auto pyramid = HalfspacePresentation::from_normals(
            {{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {-1, 0, -1}, {0, -1, -1}}, {0, 1, 1, 1, 1});
        const auto r = presentation_report(pyramid);
        CHECK(r.bounded);
        CHECK_FALSE(r.simple);
        CHECK_FALSE(r.generic);
        // a supporting line through a vertex keeps the polygon simple but not generic
        const auto tangent =
            HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}, {0, 0, 1, 1, 0});
        const auto t = presentation_report(tangent);
        CHECK(t.simple);
        CHECK_FALSE(t.generic);
    }

    TEST_CASE("simple bounded polytopes have k active facets per vertex") {
        for (const auto& p : {trapezoid(3), fixtures::pentagon(), simplex_product_presentation(9, 3, 1)}) {
            REQUIRE(presentation_report(p).simple);
            for (const auto& v : enumerate_vertices(p)) CHECK(v.active_set.size() == p.dim());
        }
    }

    TEST_CASE("Delzant examples") {
        for (long k : {0L, 1L, 2L, 5L}) CHECK(is_delzant(trapezoid(k)).delzant);
        CHECK(is_delzant(fixtures::standard_simplex()).delzant);
        const auto v = is_delzant(fixtures::thin_triangle());
        CHECK_FALSE(v.delzant);
        REQUIRE(v.witness);
        CHECK(v.witness->point == RatVector{0, 1});
        CHECK(v.witness_index == 2);
    }

    TEST_CASE("Delzant test requires a simple bounded presentation") {
        const auto quadrant = HalfspacePresentation::from_normals({{1, 0}, {0, 1}}, {0, 0});
        CHECK_THROWS_WITH(is_delzant(quadrant), "not a simple bounded presentation");
    }

    TEST_CASE("Delzant is relative to the lattice of the normals") {
        // every normal lies in 2Z x Z, and each vertex cone is a basis of that lattice
        const auto p = HalfspacePresentation::from_normals({{2, 0}, {0, 1}, {-2, 0}, {0, -1}}, {0, 0, 2, 1});
        CHECK(is_delzant(p).delzant);
    }

    TEST_CASE("relation-matrix minors give the same sublattice indices as normal minors") {
        // n - k < k selects the complementary-minor route; compare with direct determinants
        for (const auto& p : {simplex_product_presentation(10, 4, 2), stretched_presentation(2, 3),
                              simplex_product_displayed_presentation(6, 3, 1)}) {
            const auto verts = enumerate_vertices(p);
            const auto rep = presentation_report(p, verts);
            REQUIRE(p.facet_count() - p.dim() < p.dim());
            CHECK(is_delzant(p, rep, verts).delzant);
            const IntMatrix lattice = row_lattice_basis(p.a.transpose());
            const Integer covolume = abs(determinant(lattice));
            for (const auto& v : verts) CHECK(abs(determinant(p.a.select_cols(v.active_set))) == covolume);
        }
        // a non-Delzant simplex in R^3 with one relation: vertex index 3
        const auto q = HalfspacePresentation::from_normals({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -3}}, {0, 0, 0, 3});
        const auto verts = enumerate_vertices(q);
        const auto v = is_delzant(q, presentation_report(q, verts), verts);
        CHECK_FALSE(v.delzant);
        REQUIRE(v.witness);
        CHECK(abs(determinant(q.a.select_cols(v.witness_facets))) == v.witness_index);
    }

    TEST_CASE("Fano constants") {
        const auto c = fano_constant(simplex_product_presentation(10, 4, 2));
        REQUIRE(c);
        CHECK(*c == 1);
        CHECK_FALSE(fano_constant(trapezoid(2)));
        const auto sq = fano_constant(fixtures::unit_square());
        REQUIRE(sq);
        CHECK(*sq == Rational(1, 2));
        // C t reproduces delta exactly
        const auto p = fixtures::unit_square();
        const IntMatrix g = relation_matrix(p);
        const RatVector constant(p.facet_count(), *sq);
        CHECK(g * constant == g * p.b);
    }

    TEST_CASE("combinatorial equivalence") {
        CHECK(combinatorially_equivalent(trapezoid(2), fixtures::unit_square()));
        CHECK_FALSE(combinatorially_equivalent(fixtures::unit_square(), fixtures::standard_simplex()));
        CHECK_FALSE(combinatorially_equivalent(fixtures::unit_square(), fixtures::pentagon()));
        CHECK(combinatorially_equivalent(simplex_product_displayed_presentation(10, 4, 2), simplex_product(4, 6)));
        CHECK(combinatorially_equivalent(simplex_product_presentation(10, 4, 2), simplex_product(3, 5)));
        CHECK_FALSE(combinatorially_equivalent(simplex_product(2, 2), simplex_product(1, 3)));
        CHECK(combinatorially_equivalent(simplex_product(1, 1), fixtures::unit_square()));
    }

    TEST_CASE("displayed presentation matches the model one step up") {
        for (auto [n, p, k] : {std::tuple{8L, 3L, 1L}, std::tuple{10L, 4L, 2L}, std::tuple{9L, 4L, 0L}})
            CHECK(combinatorially_equivalent(simplex_product_displayed_presentation(n, p, k),
                                             simplex_product_presentation(n + 2, p + 1, k)));
    }
}
