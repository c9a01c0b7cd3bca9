#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include <doctest.h>

#include "fixtures.hpp"
#include "toriclag/families.hpp"
#include "toriclag/lagrangian.hpp"
#include "toriclag/verify.hpp"

using namespace toriclag;
using fixtures::trapezoid;

namespace {

/// Same presentation with the inequalities listed in a different order.
HalfspacePresentation permuted(const HalfspacePresentation& p, const std::vector<std::size_t>& order) {
    std::vector<IntVector> normals;
    RatVector b;
    for (std::size_t i : order) {
        normals.push_back(p.normal(i));
        b.push_back(p.b[i]);
    }
    return HalfspacePresentation::from_normals(normals, b);
}

}  // namespace

TEST_SUITE("lagrangian") {
    TEST_CASE("Maslov vectors") {
        const auto sp = build_model(simplex_product_presentation(10, 4, 2));
        CHECK(sp.quadrics.column_sum() == sp.t);
        // t in the frame where gamma has rows (1^p, 0) and (1^k, 0, 1^{n-p})
        const auto f = simplex_product_family(10, 4, 2);
        CHECK(f.model.t == IntVector{4, 8});
        CHECK(f.model.monotone);

        const auto tr = build_model(trapezoid(2));
        CHECK(tr.t == IntVector{2, 4});
        CHECK_FALSE(tr.monotone);
        CHECK(tr.embedded);

        for (long p : {1L, 2L, 3L})
            for (long k : {0L, 1L, 4L}) CHECK(stretched_family(p, k).model.t == IntVector{2 * p, p * (k + 2)});
    }

    TEST_CASE("deck group order") {
        const auto m = build_model(trapezoid(2));
        CHECK(m.torus.deck_rank == 2);
        CHECK(m.torus.deck_order() == 4);
        for (std::size_t i = 0; i < m.torus.dual.size(); ++i)
            for (std::size_t j = 0; j < m.torus.lattice.size(); ++j)
                CHECK(dot(m.torus.dual.vectors[i], m.torus.lattice.vectors[j]) == (i == j ? 1 : 0));
    }

    TEST_CASE("build_model gates") {
        const auto quadrant = HalfspacePresentation::from_normals({{1, 0}, {0, 1}}, {0, 0});
        CHECK_THROWS_AS(build_model(quadrant), Error);
        const auto dup = HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}}, {0, 0, 1, 1, 0});
        CHECK_THROWS_AS(build_model(dup), Error);
        CHECK_FALSE(build_model(fixtures::thin_triangle()).embedded);
    }

    TEST_CASE("generator pairings") {
        const auto f = simplex_product_family(10, 4, 2);
        const auto g = generator_pairing(f.model);
        REQUIRE(g.size() == 2);
        CHECK(g[0].maslov == 4);
        CHECK(g[1].maslov == 8);
        CHECK(g[0].area_over_pi == 2);
        CHECK(g[1].area_over_pi == 4);

        const auto sq = build_model(fixtures::unit_square());
        for (const auto& gp : generator_pairing(sq)) {
            CHECK(gp.maslov == 2);
            // I_mu = 2 / (pi C) I_omega with C = 1/2
            CHECK(gp.maslov * Rational(1, 2) / 2 == gp.area_over_pi);
        }
    }

    TEST_CASE("minimal Maslov numbers") {
        CHECK(minimal_maslov(simplex_product_family(10, 4, 2).model) == 4);
        CHECK(minimal_maslov(simplex_product_family(14, 6, 0).model) == 2);
        CHECK(minimal_maslov(simplex_product_family(28, 14, 4).model) == 2);
        CHECK(minimal_maslov(build_model(trapezoid(2))) == 2);
    }

    TEST_CASE("minimal Maslov is invariant under reordering the inequalities") {
        const auto p = simplex_product_presentation(12, 4, 2);
        const auto base = minimal_maslov(build_model(p));
        std::vector<std::size_t> order(p.facet_count());
        std::iota(order.begin(), order.end(), 0);
        std::reverse(order.begin(), order.end());
        CHECK(minimal_maslov(build_model(permuted(p, order))) == base);
        std::rotate(order.begin(), order.begin() + 3, order.end());
        CHECK(minimal_maslov(build_model(permuted(p, order))) == base);
    }

    TEST_CASE("minimal Maslov is invariant under unimodular row mixing of gamma") {
        const auto m = build_model(trapezoid(3));
        QuadricSystem q = m.quadrics;
        IntMatrix mix{{1, 0}, {2, 1}};
        q.gamma = mix * q.gamma;
        q.delta = mix * q.delta;
        CHECK(minimal_maslov(build_model(polytope_of(q))) == minimal_maslov(m));
    }

    TEST_CASE("monotonicity") {
        const auto f = simplex_product_family(10, 4, 2);
        const auto r = monotonicity(f.model);
        REQUIRE(r);
        CHECK(r->c == 1);
        CHECK(r->relation_holds);
        CHECK(r->simply_connected_certified);

        CHECK_FALSE(monotonicity(build_model(trapezoid(2))));

        const auto sq = monotonicity(build_model(fixtures::unit_square()));
        REQUIRE(sq);
        CHECK(sq->c == Rational(1, 2));
        CHECK(sq->relation_holds);
        CHECK_FALSE(sq->simply_connected_certified);
    }

    TEST_CASE("psi at zero angle is the real point") {
        const auto m = build_model(trapezoid(2));
        const std::vector<double> u{1, 1, 0, 0};
        const std::vector<double> phi{0, 0};
        const auto z = psi_eval(m, u, phi);
        CHECK(z == std::vector<double>{1, 0, 1, 0, 0, 0, 0, 0});
    }

    TEST_CASE("psi on the trapezoid at a quarter turn") {
        const auto m = build_model(trapezoid(2));
        const std::vector<double> u{1, 1, 0, 0};
        const std::vector<double> phi{0.5, 0};
        const auto z = psi_eval(m, u, phi);
        // gamma_1 = (0,1) and gamma_2 = (1,2): only the second coordinate turns
        CHECK(z[0] == doctest::Approx(1));
        CHECK(z[1] == doctest::Approx(0).epsilon(1e-15));
        CHECK(z[2] == doctest::Approx(0).epsilon(1e-15));
        CHECK(z[3] == doctest::Approx(1));
    }

    TEST_CASE("psi flips the first block of the simplex-product model") {
        const long n = 10, p = 4, k = 2;
        const auto f = simplex_product_family(n, p, k);
        const auto& m = f.model;
        // a point supported on coordinate k (first block) and coordinate p (second block)
        std::vector<double> u(n, 0.0);
        u[k] = std::sqrt(double(p));
        u[p] = std::sqrt(double(n - p + k));
        // angle (1, 0) in the frame of the quadrics written with rows (1^p, 0) and (1^k, 0, 1^{n-p})
        const auto& g = m.quadrics.gamma;
        IntMatrix frame(2, n);
        for (long i = 0; i < p; ++i) frame(0, i) = 1;
        for (long i = 0; i < k; ++i) frame(1, i) = 1;
        for (long i = p; i < n; ++i) frame(1, i) = 1;
        // phi with <gamma_i, phi> = 1 on the first block and 0 on the rest
        const auto phi_q = solve_linear(g.transpose(), to_rationals(frame.row(0)));
        REQUIRE(phi_q);
        std::vector<double> phi;
        for (const auto& x : *phi_q) phi.push_back(x.get_d());
        const auto z = psi_eval(m, u, phi);
        CHECK(z[2 * k] == doctest::Approx(-u[k]));
        CHECK(z[2 * p] == doctest::Approx(u[p]));
    }

    TEST_CASE("psi rejects points off the quadrics") {
        const auto m = build_model(trapezoid(2));
        const std::vector<double> u{1, 1, 1, 0};
        const std::vector<double> phi{0, 0};
        CHECK_THROWS_AS(psi_eval(m, u, phi), Error);
    }

    TEST_CASE("deck transformations") {
        const auto m = build_model(trapezoid(2));
        const ModelPoint x{{0.6, 0.8, 0.6, std::sqrt(3 - 0.36 - 2 * 0.64)}, {0.3, 0.7}};
        const auto id = deck_transform(m, RatVector{0, 0}, x);
        CHECK(id.u == x.u);
        CHECK(id.phi == x.phi);

        const auto e1 = m.torus.dual.vectors[0];
        const auto y = deck_transform(m, e1, x);
        std::vector<double> signs;
        for (std::size_t i = 0; i < 4; ++i) signs.push_back(y.u[i] / x.u[i]);
        CHECK(signs == std::vector<double>{1, -1, -1, 1});
        for (std::size_t i = 0; i < 4; ++i) {
            const Rational pr = dot(m.quadrics.gamma.col(i), e1);
            CHECK(signs[i] == (pr.get_num() % 2 == 0 ? 1.0 : -1.0));
        }
        const auto twice = deck_transform(m, e1, y);
        CHECK(twice.u == x.u);
        CHECK(twice.phi[0] == doctest::Approx(x.phi[0] + 2 * e1[0].get_d()));
        CHECK_THROWS_AS(deck_transform(m, RatVector{Rational(1, 2), 0}, x), Error);
    }

    TEST_CASE("psi is invariant under every deck representative") {
        for (const auto& p : {trapezoid(2), simplex_product_presentation(10, 4, 2), stretched_presentation(2, 4)}) {
            const auto m = build_model(p);
            const auto s = sample_lagrangian(m, 5, 17);
            const std::size_t r = m.torus.dual.size();
            for (const auto& pt : s.points) {
                const auto z0 = psi_eval(m, pt.u, pt.phi);
                for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
                    RatVector g(r, 0);
                    for (std::size_t i = 0; i < r; ++i)
                        if (mask >> i & 1)
                            for (std::size_t j = 0; j < r; ++j) g[j] += m.torus.dual.vectors[i][j];
                    const auto y = deck_transform(m, g, ModelPoint{pt.u, pt.phi});
                    const auto z1 = psi_eval(m, y.u, y.phi);
                    double err = 0;
                    for (std::size_t i = 0; i < z0.size(); ++i) err = std::max(err, std::abs(z0[i] - z1[i]));
                    CHECK(err < 1e-12);
                }
            }
        }
    }

    TEST_CASE("image of psi lies on the moment-angle manifold") {
        for (const auto& p : {trapezoid(2), simplex_product_presentation(10, 4, 2), stretched_presentation(3, 2)}) {
            const auto m = build_model(p);
            for (const auto& pt : sample_lagrangian(m, 20, 4).points) {
                const auto z = psi_eval(m, pt.u, pt.phi);
                std::vector<std::complex<double>> zc;
                for (std::size_t i = 0; i < z.size(); i += 2) zc.emplace_back(z[i], z[i + 1]);
                const auto h = moment_map(m.quadrics.gamma, zc);
                for (std::size_t j = 0; j < h.size(); ++j) CHECK(std::abs(h[j] - m.quadrics.delta[j].get_d()) < 1e-10);
            }
        }
    }

    TEST_CASE("coordinate angles") {
        const auto m = build_model(trapezoid(2));
        const std::vector<double> phi{0.25, 0.5};
        const auto a = coordinate_angles(m, phi);
        REQUIRE(a.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(a[i] == doctest::Approx(m.quadrics.gamma(0, i).get_d() * 0.25 + m.quadrics.gamma(1, i).get_d() * 0.5));
    }
}
