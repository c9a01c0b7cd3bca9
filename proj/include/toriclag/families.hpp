/**
 * The two parametric families of Lagrangians L_k.
 *
 * simplex_product(n, p, k): n coordinates, quadrics
 *     u_1^2 + ... + u_p^2 = p,
 *     u_1^2 + ... + u_k^2 + u_{p+1}^2 + ... + u_n^2 = n - p + k,
 * polytope Delta^{p-1} x Delta^{n-p-1} with all offsets 1.
 *
 * stretched(p, k): 4p coordinates in four blocks of p with torus weights
 * (0,1), (1,k), (1,0), (0,1) and delta = (1, k + 1); p = 1 is a trapezoid.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toriclag/lagrangian.hpp"

namespace toriclag {

enum class FamilyKind { simplex_product, stretched, trapezoid };

std::string to_string(FamilyKind kind);

struct FamilyModel {
    FamilyKind kind = FamilyKind::simplex_product;
    long n = 0;  ///< number of complex coordinates
    long p = 0;
    long k = 0;
    bool all_even = false;      ///< n, p, k even
    bool theorem_range = false;  ///< hypotheses of the non-isotopy theorem for this family hold
    LagrangianModel model;
    std::optional<std::string> diffeo_type;
    std::vector<std::size_t> diffeo_sphere_dims;  ///< sphere factors of diffeo_type besides the T^2
    long index_threshold = 0;

    /// Sizes of the coordinate blocks and the torus weight shared by each block.
    std::vector<std::pair<std::size_t, std::pair<long, long>>> blocks() const;
};

/// Presentation behind simplex_product_family, in R^{n-2} with n facets.
HalfspacePresentation simplex_product_presentation(long n, long p, long k);
/// The presentation in R^n with n + 2 facets written x_i + 1 >= 0, -x_1 - ... - x_p + 1 >= 0,
/// -x_1 - ... - x_k - x_{p+1} - ... - x_n + 1 >= 0.
HalfspacePresentation simplex_product_displayed_presentation(long n, long p, long k);
/// Relation matrix of the stretched family.
QuadricSystem stretched_quadrics(long p, long k);
HalfspacePresentation stretched_presentation(long p, long k);

/// Requires n >= 2p, 0 <= k < p - 1.
FamilyModel simplex_product_family(long n, long p, long k, const EnumerationOptions& opts = {});
/// Requires p >= 1, k >= 0.
FamilyModel stretched_family(long p, long k, const EnumerationOptions& opts = {});

enum class Branch { A, B };

struct DiscClass {
    Branch branch = Branch::A;
    long lambda1 = 0;
    long lambda2 = 0;
    Integer index;
    std::pair<Integer, Integer> boundary;  ///< class in pi_1 = Z^2 of the torus directions
    bool generic_point = false;
};

/// Index and boundary class of (branch, lambda1, lambda2).
DiscClass disc_class(const FamilyModel& f, Branch branch, long lambda1, long lambda2);

/**
 * Classes with index <= index_bound on both branches, lambda_i in [0, lambda_cap].
 * The default cap is max(1, index_bound / smallest positive coefficient); only
 * branches with a non-positive coefficient are truncated by it.
 */
std::vector<DiscClass> disc_spectrum(const FamilyModel& f, long index_bound, std::optional<long> lambda_cap = {});

struct InvariantReport {
    Integer m;
    DiscClass witness;
    bool doubled_primitive = false;
    long threshold = 0;
    long bound = 0;
    std::optional<Integer> closed_form;
};

/// Closed form of m where known: 2(n-p+k) when n > 2p, 2p(k+2) when k >= 1.
std::optional<Integer> closed_form_m(const FamilyModel& f);

/// Minimal index over K.  Throws Error("bound too small") when K is empty up to the bound.
InvariantReport invariant_m(const FamilyModel& f, std::optional<long> index_bound = {});

struct DistinguishClass {
    std::optional<std::string> diffeo_type;
    Integer minimal_maslov;
    Integer m;
    std::vector<long> ks;  ///< sorted parameter values k in the class
};

struct NonIsotopicPair {
    long k1 = 0;
    long k2 = 0;
    std::string diffeo_type;
};

struct DistinguishReport {
    FamilyKind kind = FamilyKind::simplex_product;
    std::vector<DistinguishClass> classes;  ///< sorted by (diffeo type, minimal Maslov, m)
    std::vector<NonIsotopicPair> non_isotopic;
    bool hypotheses_hold = false;
    std::optional<long> guaranteed_classes;  ///< p / 2 for the simplex-product family
};

/// Models must share the family kind and n, p.
DistinguishReport distinguish(const std::vector<FamilyModel>& fs);

/// 2^{rank H_1(L; Z_2)} from the diffeomorphism certificate.
Integer smooth_isotopy_class_count(const FamilyModel& f);

}  // namespace toriclag
