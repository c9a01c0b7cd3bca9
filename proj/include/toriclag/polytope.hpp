/**
 * Halfspace presentations {x in R^k : <a_i, x> + b_i >= 0, i = 1..n}.
 *
 * The normals a_i are the columns of the k x n integer matrix A.  Vertex
 * enumeration is exhaustive over index subsets and exact; either the k-subsets
 * of normals are solved directly or the (n-k)-subsets of the relation matrix
 * are used, whichever needs smaller linear systems.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toriclag/exactlin.hpp"

namespace toriclag {

struct HalfspacePresentation {
    IntMatrix a;  ///< k x n, column i is the normal a_i
    RatVector b;  ///< length n

    std::size_t dim() const { return a.rows(); }
    std::size_t facet_count() const { return a.cols(); }
    IntVector normal(std::size_t i) const { return a.col(i); }

    /// Builds from a list of normals (each of length k).  Validates the result.
    static HalfspacePresentation from_normals(const std::vector<IntVector>& normals, const RatVector& b);

    /// Throws Error unless n >= k >= 1, b has length n and no normal is zero.
    void validate() const;

    /// Slack vector A^T x + b.
    RatVector slack(const RatVector& x) const;

    /// Same presentation without the listed inequalities.
    HalfspacePresentation without(const std::vector<std::size_t>& drop) const;
};

struct VertexData {
    RatVector point;
    std::vector<std::size_t> active_set;  ///< sorted, exact equality
};

struct PresentationReport {
    bool bounded = false;
    bool simple = false;
    bool generic = false;
    std::vector<std::size_t> redundant_facets;
    std::size_t vertex_count = 0;

    bool irredundant() const { return redundant_facets.empty(); }
};

enum class VertexMethod { automatic, primal, gale };

struct EnumerationOptions {
    /// Upper bound on the number of index subsets examined by one enumeration.
    std::uint64_t subset_budget = 20'000'000;
    VertexMethod method = VertexMethod::automatic;
};

/// All vertices with their active sets, sorted lexicographically by point.
std::vector<VertexData> enumerate_vertices(const HalfspacePresentation& p, const EnumerationOptions& opts = {});

/// True when {x : A^T x >= 0} contains a nonzero vector.
bool has_recession_direction(const HalfspacePresentation& p, const EnumerationOptions& opts = {});

/// Extreme rays of the recession cone as primitive integer vectors (pointed presentations only).
std::vector<IntVector> recession_rays(const HalfspacePresentation& p, const EnumerationOptions& opts = {});

PresentationReport presentation_report(const HalfspacePresentation& p, const EnumerationOptions& opts = {});
/// Same, reusing the output of enumerate_vertices(p, opts).
PresentationReport presentation_report(const HalfspacePresentation& p, const std::vector<VertexData>& vertices,
                                       const EnumerationOptions& opts = {});

/// Inequalities that define facets: the complement of redundant_facets.
std::vector<std::size_t> irredundant_facets(const PresentationReport& r, std::size_t facet_count);

struct DelzantVerdict {
    bool delzant = true;
    /// Set on failure: the offending vertex, its facets and the sublattice index.
    std::optional<VertexData> witness;
    std::vector<std::size_t> witness_facets;
    Integer witness_index = 1;
};

/// Throws Error("not a simple bounded presentation") when the precondition fails.
DelzantVerdict is_delzant(const HalfspacePresentation& p, const EnumerationOptions& opts = {});
/**
 * Same, from a report and vertex list of p.  When n - k < k the sublattice
 * index at a vertex is read off the complementary maximal minor of the
 * saturated relation matrix instead of the k x k minor of A.
 */
DelzantVerdict is_delzant(const HalfspacePresentation& p, const PresentationReport& rep,
                          const std::vector<VertexData>& vertices);

/// Saturated relation basis Gamma of the normals (Gamma A^T = 0) and delta = Gamma b.
IntMatrix relation_matrix(const HalfspacePresentation& p);

/**
 * C > 0 with C * t = delta, t the column sum of the relation matrix, i.e.
 * a constant-offset presentation with the same normals and the same delta.
 * None when no relations exist or t = 0.
 */
std::optional<Rational> fano_constant(const HalfspacePresentation& p);

/// Both inputs must be bounded and simple.  Compares vertex-facet incidences.
bool combinatorially_equivalent(const HalfspacePresentation& p1, const HalfspacePresentation& p2,
                                const EnumerationOptions& opts = {});

/// Vertex-facet incidence of a bounded simple presentation, restricted to facet-defining inequalities.
struct Incidence {
    std::vector<std::size_t> facets;          ///< original inequality indices
    std::vector<std::vector<std::size_t>> vertices;  ///< positions into `facets`
};

Incidence facet_incidence(const HalfspacePresentation& p, const EnumerationOptions& opts = {});
Incidence facet_incidence(const PresentationReport& rep, std::size_t facet_count, const std::vector<VertexData>& vertices);

}  // namespace toriclag
