#include "toriclag/lagrangian.hpp"

#include <cmath>
#include <numbers>

namespace toriclag {

Integer TorusData::deck_order() const {
    Integer o = 1;
    mpz_mul_2exp(o.get_mpz_t(), o.get_mpz_t(), deck_rank);
    return o;
}

LagrangianModel build_model(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    LagrangianModel m;
    m.vertices = enumerate_vertices(p, opts);
    const PresentationReport rep = presentation_report(p, m.vertices, opts);
    if (!rep.bounded) throw Error("presentation is unbounded");
    if (!rep.irredundant()) throw Error("presentation is redundant; the quadric locus would be disconnected");

    m.presentation = p;
    m.quadrics = quadrics_of(p);
    m.embedded = rep.simple && is_delzant(p, rep, m.vertices).delzant;
    if (rep.simple) m.topology = topology_hint(rep, facet_incidence(rep, p.facet_count(), m.vertices));

    const IntMatrix& gamma = m.quadrics.gamma;
    m.torus.deck_rank = gamma.rows();
    if (gamma.rows() > 0) {
        const IntMatrix basis = row_lattice_basis(gamma.transpose());
        for (std::size_t r = 0; r < basis.rows(); ++r) m.torus.lattice.vectors.push_back(to_rationals(basis.row(r)));
        m.torus.dual = dual_basis(m.torus.lattice);
    }
    m.t = m.quadrics.column_sum();
    m.fano_c = fano_constant(p);
    m.monotone = m.fano_c.has_value();
    return m;
}

std::vector<GeneratorPairing> generator_pairing(const LagrangianModel& m) {
    std::vector<GeneratorPairing> out;
    for (const auto& eps : m.torus.dual.vectors) {
        const Rational mu = dot(m.t, eps);
        if (mu.get_den() != 1) throw Error("internal: Maslov pairing is not integral");
        out.push_back({mu.get_num(), dot(eps, m.quadrics.delta) / 2});
    }
    return out;
}

Integer minimal_maslov(const LagrangianModel& m) {
    IntVector mu;
    for (const auto& g : generator_pairing(m)) mu.push_back(g.maslov);
    const Integer g = gcd_of(mu);
    if (sgn(g) == 0) throw Error("Maslov class vanishes");
    return g;
}

std::optional<MonotonicityReport> monotonicity(const LagrangianModel& m) {
    if (!m.fano_c) return std::nullopt;
    MonotonicityReport rep;
    rep.c = *m.fano_c;
    rep.relation_holds = true;
    for (const auto& g : generator_pairing(m))
        if (Rational(g.maslov) * rep.c / 2 != g.area_over_pi) rep.relation_holds = false;
    rep.simply_connected_certified = m.topology.simply_connected();
    return rep;
}

std::vector<double> coordinate_angles(const LagrangianModel& m, std::span<const double> phi) {
    const IntMatrix& gamma = m.quadrics.gamma;
    if (phi.size() != gamma.rows()) throw Error("angle vector has the wrong length");
    std::vector<double> a(gamma.cols(), 0.0);
    for (std::size_t i = 0; i < gamma.cols(); ++i)
        for (std::size_t j = 0; j < gamma.rows(); ++j) a[i] += gamma(j, i).get_d() * phi[j];
    return a;
}

std::vector<double> psi_eval(const LagrangianModel& m, std::span<const double> u, std::span<const double> phi,
                             double tol) {
    if (u.size() != m.quadrics.ambient_n()) throw Error("point dimension differs from the number of coordinates");
    if (!membership(m.quadrics, u, tol)) throw Error("point is not on the quadric locus");
    const auto ang = coordinate_angles(m, phi);
    std::vector<double> z(2 * u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        z[2 * i] = u[i] * std::cos(std::numbers::pi * ang[i]);
        z[2 * i + 1] = u[i] * std::sin(std::numbers::pi * ang[i]);
    }
    return z;
}

ModelPoint deck_transform(const LagrangianModel& m, const RatVector& gamma_star, const ModelPoint& x) {
    const IntMatrix& gamma = m.quadrics.gamma;
    if (gamma_star.size() != gamma.rows() || x.phi.size() != gamma.rows() || x.u.size() != gamma.cols())
        throw Error("deck transform: dimension mismatch");
    ModelPoint y = x;
    for (std::size_t i = 0; i < gamma.cols(); ++i) {
        const Rational pairing = dot(gamma.col(i), gamma_star);
        if (pairing.get_den() != 1) throw Error("element is not in the dual lattice");
        if (mpz_odd_p(pairing.get_num_mpz_t())) y.u[i] = -y.u[i];
    }
    for (std::size_t j = 0; j < gamma.rows(); ++j) y.phi[j] += gamma_star[j].get_d();
    return y;
}

}  // namespace toriclag
