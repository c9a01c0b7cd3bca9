/**
 * Quadric systems  sum_i gamma_{j,i} u_i^2 = delta_j  attached to a halfspace
 * presentation, their real solution locus R and the complex moment-angle
 * manifold Z cut out by the same equations in |z_i|^2.
 */
#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "toriclag/polytope.hpp"

namespace toriclag {

struct QuadricSystem {
    IntMatrix gamma;  ///< (n-k) x n, column i is gamma_i
    RatVector delta;  ///< length n-k

    std::size_t ambient_n() const { return gamma.cols(); }
    std::size_t relation_count() const { return gamma.rows(); }
    std::size_t solution_dim() const { return gamma.cols() - gamma.rows(); }
    /// t = gamma_1 + ... + gamma_n
    IntVector column_sum() const;
};

/// Throws Error("normals do not span") when A has rank below k.
QuadricSystem quadrics_of(const HalfspacePresentation& p);

/// Normals from the saturated kernel of gamma, offsets from one exact solution of gamma b = delta.
HalfspacePresentation polytope_of(const QuadricSystem& q);

/// Nonempty and generic.
bool nondegenerate(const QuadricSystem& q);

/// max_j |sum_i gamma_{j,i} u_i^2 - delta_j| <= tol.
bool membership(const QuadricSystem& q, std::span<const double> u, double tol = 1e-9);
/// Exact version for rational points.
bool membership(const QuadricSystem& q, const RatVector& u);

/// Largest absolute quadric residual at u.
double quadric_residual(const QuadricSystem& q, std::span<const double> u);

/// (sum_i gamma_{j,i} |z_i|^2)_j
std::vector<double> moment_map(const IntMatrix& gamma, std::span<const std::complex<double>> z);

struct GaussianRational {
    Rational re;
    Rational im;
};
RatVector moment_map(const IntMatrix& gamma, const std::vector<GaussianRational>& z);

struct TopologyHint {
    enum class Kind { product_of_spheres, torus, unknown };
    Kind kind = Kind::unknown;
    /// Sphere dimensions of the factors in nondecreasing order (1 stands for a circle).
    std::vector<std::size_t> sphere_dims;
    std::string description;
    std::string note;

    /// Every factor is a sphere of dimension at least 2.
    bool simply_connected() const;
};

/**
 * Recognizes presentations combinatorially equal to a product of simplices
 * and names the corresponding product of spheres.  Throws on redundant or
 * non-simple input.
 */
TopologyHint topology_hint(const HalfspacePresentation& p, const EnumerationOptions& opts = {});
/// Same, from a report and the incidence built on it.
TopologyHint topology_hint(const PresentationReport& rep, const Incidence& inc);

/// Group sizes (d+1 for each simplex factor) when p is a product of simplices.
std::optional<std::vector<std::size_t>> simplex_product_factors(const Incidence& inc);

}  // namespace toriclag
