/**
 * The Lagrangian model  psi(u, phi) = (u_i exp(i pi <gamma_i, phi>))_i  on
 * R x T, the lattice data behind its deck group, and the Maslov and area
 * homomorphisms on the generators of the torus directions.
 */
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toriclag/quadrics.hpp"

namespace toriclag {

struct TorusData {
    LatticeBasis lattice;  ///< basis of the lattice spanned by the gamma_i
    LatticeBasis dual;     ///< epsilon_i with <epsilon_i, lattice_j> = [i == j]
    std::size_t deck_rank = 0;

    /// Order of the deck group, 2^deck_rank.
    Integer deck_order() const;
};

struct LagrangianModel {
    HalfspacePresentation presentation;
    QuadricSystem quadrics;
    TorusData torus;
    IntVector t;  ///< column sum of gamma
    std::optional<Rational> fano_c;
    bool monotone = false;
    bool embedded = false;  ///< Delzant; otherwise only an immersion
    TopologyHint topology;
    std::vector<VertexData> vertices;
};

/// Throws on unbounded or redundant input; non-Delzant input yields embedded = false.
LagrangianModel build_model(const HalfspacePresentation& p, const EnumerationOptions& opts = {});

struct GeneratorPairing {
    Integer maslov;        ///< I_mu(r_i) = <epsilon_i, t>
    Rational area_over_pi;  ///< I_omega(r_i) / pi = <epsilon_i, delta> / 2
};

std::vector<GeneratorPairing> generator_pairing(const LagrangianModel& m);

/// gcd of |<epsilon_i, t>|; throws Error("Maslov class vanishes") when all are zero.
Integer minimal_maslov(const LagrangianModel& m);

struct MonotonicityReport {
    Rational c;
    /// I_mu(r_i) * (pi C / 2) == I_omega(r_i) for every generator, checked exactly.
    bool relation_holds = false;
    /// The hypothesis that R is simply connected is certified by the topology hint.
    bool simply_connected_certified = false;
};

std::optional<MonotonicityReport> monotonicity(const LagrangianModel& m);

/// 2n reals (Re z_1, Im z_1, ...).  Throws when u is off the quadric locus by more than tol.
std::vector<double> psi_eval(const LagrangianModel& m, std::span<const double> u, std::span<const double> phi,
                             double tol = 1e-9);

struct ModelPoint {
    std::vector<double> u;
    std::vector<double> phi;
};

/// Action of gamma* in the dual lattice; throws when gamma* pairs non-integrally with some gamma_i.
ModelPoint deck_transform(const LagrangianModel& m, const RatVector& gamma_star, const ModelPoint& x);

/// <gamma_i, phi> for every coordinate i.
std::vector<double> coordinate_angles(const LagrangianModel& m, std::span<const double> phi);

}  // namespace toriclag
