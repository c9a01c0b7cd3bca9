#include "toriclag/quadrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace toriclag {

IntVector QuadricSystem::column_sum() const { return gamma * IntVector(gamma.cols(), Integer(1)); }

QuadricSystem quadrics_of(const HalfspacePresentation& p) {
    if (rank(p.a) < p.dim()) throw Error("normals do not span");
    QuadricSystem q;
    q.gamma = relation_matrix(p);
    q.delta = q.gamma * p.b;
    return q;
}

HalfspacePresentation polytope_of(const QuadricSystem& q) {
    const std::size_t n = q.ambient_n();
    if (q.delta.size() != q.relation_count()) throw Error("delta length differs from the number of quadrics");
    if (rank(q.gamma) != q.relation_count()) throw Error("quadric coefficients are not of full row rank");
    HalfspacePresentation p;
    p.a = kernel_saturated(q.gamma);
    if (q.relation_count() == 0) {
        p.a = IntMatrix::identity(n);
        p.b = RatVector(n);
        return p;
    }
    auto b = solve_linear(q.gamma, q.delta);
    if (!b) throw Error("no polyhedron realizes delta");
    p.b = *b;
    return p;
}

bool nondegenerate(const QuadricSystem& q) {
    const HalfspacePresentation p = polytope_of(q);
    const PresentationReport rep = presentation_report(p);
    return rep.vertex_count > 0 && rep.generic;
}

double quadric_residual(const QuadricSystem& q, std::span<const double> u) {
    if (u.size() != q.ambient_n()) throw Error("point dimension differs from the number of coordinates");
    double worst = 0;
    for (std::size_t j = 0; j < q.relation_count(); ++j) {
        double s = -q.delta[j].get_d();
        for (std::size_t i = 0; i < u.size(); ++i) s += q.gamma(j, i).get_d() * u[i] * u[i];
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

bool membership(const QuadricSystem& q, std::span<const double> u, double tol) {
    return quadric_residual(q, u) <= tol;
}

bool membership(const QuadricSystem& q, const RatVector& u) {
    if (u.size() != q.ambient_n()) throw Error("point dimension differs from the number of coordinates");
    RatVector sq(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) sq[i] = u[i] * u[i];
    return q.gamma * sq == q.delta;
}

std::vector<double> moment_map(const IntMatrix& gamma, std::span<const std::complex<double>> z) {
    if (z.size() != gamma.cols()) throw Error("point dimension differs from the number of coordinates");
    std::vector<double> h(gamma.rows(), 0.0);
    for (std::size_t j = 0; j < gamma.rows(); ++j)
        for (std::size_t i = 0; i < z.size(); ++i) h[j] += gamma(j, i).get_d() * std::norm(z[i]);
    return h;
}

RatVector moment_map(const IntMatrix& gamma, const std::vector<GaussianRational>& z) {
    if (z.size() != gamma.cols()) throw Error("point dimension differs from the number of coordinates");
    RatVector sq(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) sq[i] = z[i].re * z[i].re + z[i].im * z[i].im;
    return gamma * sq;
}

bool TopologyHint::simply_connected() const {
    return kind != Kind::unknown && std::all_of(sphere_dims.begin(), sphere_dims.end(), [](std::size_t d) { return d >= 2; });
}

std::optional<std::vector<std::size_t>> simplex_product_factors(const Incidence& inc) {
    const std::size_t nf = inc.facets.size(), nv = inc.vertices.size();
    if (nf == 0 || nv == 0) return std::nullopt;
    std::vector<std::vector<char>> missing(nv, std::vector<char>(nf, 1));
    for (std::size_t v = 0; v < nv; ++v)
        for (auto f : inc.vertices[v]) missing[v][f] = 0;

    // f ~ g iff never missing together; in a product of simplices each vertex misses one facet per factor
    std::vector<std::size_t> group(nf, nf);
    std::size_t groups = 0;
    for (std::size_t f = 0; f < nf; ++f) {
        if (group[f] != nf) continue;
        group[f] = groups;
        for (std::size_t g = f + 1; g < nf; ++g) {
            bool together = false;
            for (std::size_t v = 0; v < nv && !together; ++v) together = missing[v][f] && missing[v][g];
            if (!together) group[g] = groups;
        }
        ++groups;
    }
    std::vector<std::size_t> sizes(groups, 0);
    for (auto g : group) ++sizes[g];

    std::set<std::vector<std::size_t>> seen;
    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<std::size_t> pick(groups, nf);
        for (std::size_t f = 0; f < nf; ++f) {
            if (!missing[v][f]) continue;
            if (pick[group[f]] != nf) return std::nullopt;
            pick[group[f]] = f;
        }
        if (std::find(pick.begin(), pick.end(), nf) != pick.end()) return std::nullopt;
        seen.insert(pick);
    }
    std::size_t product = 1;
    for (auto s : sizes) {
        if (s < 2) return std::nullopt;
        product *= s;
    }
    if (seen.size() != nv || product != nv) return std::nullopt;
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

TopologyHint topology_hint(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const auto verts = enumerate_vertices(p, opts);
    const PresentationReport rep = presentation_report(p, verts, opts);
    return topology_hint(rep, facet_incidence(rep, p.facet_count(), verts));
}

TopologyHint topology_hint(const PresentationReport& rep, const Incidence& inc) {
    if (!rep.irredundant())
        throw Error("redundant presentation: the quadric locus is a disjoint union of copies, one per sign pattern "
                    "of the redundant coordinates");
    TopologyHint hint;
    const auto sizes = simplex_product_factors(inc);
    if (!sizes) {
        hint.description = "unknown";
        hint.note = "not combinatorially a product of simplices";
        return hint;
    }
    std::size_t circles = 0;
    std::string text;
    for (auto s : *sizes) {
        const std::size_t d = s - 1;
        hint.sphere_dims.push_back(d);
        if (d == 1) {
            ++circles;
            continue;
        }
        text += (text.empty() ? "" : " x ") + std::string("S^") + std::to_string(d);
    }
    if (circles == sizes->size()) {
        hint.kind = TopologyHint::Kind::torus;
        hint.description = "T^" + std::to_string(circles);
        hint.note = "combinatorially a cube";
    } else {
        hint.kind = TopologyHint::Kind::product_of_spheres;
        if (circles == 1) text += " x S^1";
        else if (circles > 1) text += " x T^" + std::to_string(circles);
        hint.description = text;
        hint.note = "combinatorially a product of simplices";
    }
    return hint;
}

}  // namespace toriclag
