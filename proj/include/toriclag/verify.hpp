/**
 * Floating-point checks of the model at sample points: the Lagrangian
 * condition for psi, generator-cycle areas and Maslov indices of explicit
 * holomorphic discs computed from boundary winding numbers.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toriclag/families.hpp"

namespace toriclag {

struct SamplePoint {
    std::vector<double> u;
    std::vector<double> phi;
};

struct SampleSet {
    std::vector<SamplePoint> points;
    std::uint64_t seed = 0;
    double residual_tol = 1e-12;
    double max_residual = 0;
};

/**
 * Points u in the interior of R drawn from random convex combinations of the
 * vertex slacks with random signs, then polished by Gauss-Newton steps;
 * angles phi uniform on the fundamental domain spanned by 2 epsilon_i.
 */
SampleSet sample_lagrangian(const LagrangianModel& m, std::size_t count, std::uint64_t seed,
                            double residual_tol = 1e-12);

/// Scales u by `scale` on the support of one quadric before the tangent kernel is computed.
struct FramePerturbation {
    std::size_t quadric_row = 0;
    double scale = 1.0;
};

/// max |omega(v_a, v_b)| over unit tangent frame vectors at every sample.
double lagrangian_residual(const LagrangianModel& m, const SampleSet& s,
                           std::optional<FramePerturbation> perturb = std::nullopt);

/// Square root of the barycenter of the vertex slacks: an interior point of R.
std::vector<double> base_point(const LagrangianModel& m);

/// Shoelace integral of (1/2) sum (x dy - y dx) over s -> psi(u, 2 s epsilon_i), s in [0, 1].
double cycle_area_numeric(const LagrangianModel& m, std::size_t i, std::size_t steps);
double cycle_area_numeric(const LagrangianModel& m, std::size_t i, std::size_t steps, std::span<const double> u);
/// pi <epsilon_i, delta>
double cycle_area_exact(const LagrangianModel& m, std::size_t i);

/// z_i(theta) = amplitude * exp(i pi phase) * exp(i exponent theta) on the unit circle.
struct DiscCoordinate {
    double amplitude = 0;
    double phase = 0;  ///< in units of pi
    long exponent = 0;
};

struct DiscSpec {
    std::vector<DiscCoordinate> coords;
};

/// Boundary circle stays on the Lagrangian at every sample.
bool disc_boundary_on_lagrangian(const LagrangianModel& m, const DiscSpec& d, std::size_t boundary_samples = 1024,
                                 double tol = 1e-9);

/// Winding numbers of the nonzero coordinates (0 for vanishing ones) by angle-increment summation.
std::vector<long> coordinate_windings(const DiscSpec& d, std::size_t boundary_samples = 1024);

/// 2 <t, w> where <gamma_i, w> equals the winding of coordinate i.
Integer disc_index_winding(const LagrangianModel& m, const DiscSpec& d, std::size_t boundary_samples = 1024);

/// The explicit monomial disc of a family representing a disc class.
DiscSpec explicit_disc(const FamilyModel& f, const DiscClass& c);

/// The disc of class (0, 2) of the stretched family supported on blocks 1, 2 and 4.
DiscSpec stretched_h_disc(const FamilyModel& f);

}  // namespace toriclag
