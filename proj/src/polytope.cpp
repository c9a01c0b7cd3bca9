#include "toriclag/polytope.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace toriclag {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

void check_budget(std::size_t n, std::size_t r, const EnumerationOptions& opts) {
    const std::uint64_t count = binomial(n, r);
    if (count > opts.subset_budget)
        throw Error("subset budget exceeded: C(" + std::to_string(n) + ", " + std::to_string(r) + ") = " +
                    std::to_string(count) + " > " + std::to_string(opts.subset_budget));
}

/// Calls f on every r-subset of {0..n-1} in lexicographic order until f returns false.
template <class F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
    if (r > n) return;
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
        if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool nonnegative(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

bool use_gale(const HalfspacePresentation& p, const EnumerationOptions& opts, std::size_t primal_size,
              std::size_t gale_size) {
    switch (opts.method) {
        case VertexMethod::primal: return false;
        case VertexMethod::gale: return true;
        case VertexMethod::automatic: break;
    }
    (void)p;
    return gale_size < primal_size;
}

std::vector<std::size_t> active_set(const RatVector& slack) {
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < slack.size(); ++i)
        if (sgn(slack[i]) == 0) act.push_back(i);
    return act;
}

RatMatrix transposed_rat(const IntMatrix& a) { return RatMatrix(a.transpose()); }

std::vector<VertexData> vertices_primal(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const std::size_t k = p.dim(), n = p.facet_count();
    check_budget(n, k, opts);
    std::set<RatVector> points;
    RatMatrix m(k, k);
    RatVector rhs(k);
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) m(r, c) = p.a(c, s[r]);
            rhs[r] = -p.b[s[r]];
        }
        auto x = solve_unique(m, rhs);
        if (x && nonnegative(p.slack(*x))) points.insert(std::move(*x));
        return true;
    });
    std::vector<VertexData> out;
    for (const auto& x : points) out.push_back({x, active_set(p.slack(x))});
    return out;
}

std::vector<VertexData> vertices_gale(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const std::size_t k = p.dim(), n = p.facet_count();
    const IntMatrix gamma = kernel_saturated(p.a);
    const std::size_t m = gamma.rows();
    check_budget(n, m, opts);
    const RatVector delta = gamma * p.b;
    std::set<RatVector> slacks;
    RatMatrix g(m, m);
    for_each_subset(n, m, [&](const std::vector<std::size_t>& t) {
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) g(r, c) = gamma(r, t[c]);
        auto vt = solve_unique(g, delta);
        if (!vt || !nonnegative(*vt)) return true;
        RatVector v(n);
        for (std::size_t c = 0; c < m; ++c) v[t[c]] = (*vt)[c];
        slacks.insert(std::move(v));
        return true;
    });
    const RatMatrix at = transposed_rat(p.a);
    std::vector<VertexData> out;
    for (const auto& v : slacks) {
        RatVector rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = v[i] - p.b[i];
        auto x = solve_unique(at, rhs);
        if (!x) throw Error("internal: Gale vertex does not lift");
        out.push_back({std::move(*x), active_set(v)});
    }
    std::sort(out.begin(), out.end(), [](const VertexData& l, const VertexData& r) { return l.point < r.point; });
    (void)k;
    return out;
}

/// Rewrites a rank-deficient presentation in coordinates on the span of its normals.
struct Reduction {
    HalfspacePresentation p;
    IntMatrix basis;  ///< k x r, independent normals spanning the column space
};

std::optional<RatVector> span_coordinates(const IntMatrix& basis, const IntVector& a) {
    return solve_unique(RatMatrix(basis), to_rationals(a));
}

/// Clears denominators of c by a positive factor; returns the factor.
Integer clear_denominators(const RatVector& c, IntVector& out) {
    Integer l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    out.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational y = c[i] * Rational(l);
        out[i] = y.get_num();
    }
    return l;
}

Reduction reduce(const HalfspacePresentation& p) {
    const auto piv = pivot_columns(RatMatrix(p.a));
    Reduction red;
    red.basis = p.a.select_cols(piv);
    const std::size_t r = piv.size(), n = p.facet_count();
    red.p.a = IntMatrix(r, n);
    red.p.b = RatVector(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto c = span_coordinates(red.basis, p.a.col(j));
        IntVector ci;
        const Integer l = clear_denominators(*c, ci);
        for (std::size_t i = 0; i < r; ++i) red.p.a(i, j) = ci[i];
        red.p.b[j] = p.b[j] * Rational(l);
    }
    return red;
}

bool implied_by(const HalfspacePresentation& p, const IntVector& a, const Rational& beta,
                const EnumerationOptions& opts) {
    const bool a_zero = std::all_of(a.begin(), a.end(), [](const Integer& x) { return sgn(x) == 0; });
    if (p.facet_count() == 0) return a_zero && sgn(beta) >= 0;
    if (rank(p.a) < p.dim()) {
        const Reduction red = reduce(p);
        auto c = span_coordinates(red.basis, a);
        if (!c) return enumerate_vertices(red.p, opts).empty();
        IntVector ci;
        const Integer l = clear_denominators(*c, ci);
        return implied_by(red.p, ci, beta * Rational(l), opts);
    }
    const auto verts = enumerate_vertices(p, opts);
    if (verts.empty()) return true;
    for (const auto& v : verts)
        if (dot(a, v.point) + beta < 0) return false;
    for (const auto& d : recession_rays(p, opts))
        if (dot(a, d) < 0) return false;
    return true;
}

std::vector<std::size_t> redundant_by_faces(const HalfspacePresentation& p, const std::vector<VertexData>& verts) {
    const std::size_t n = p.facet_count();
    std::vector<std::size_t> redundant;
    std::map<std::vector<std::size_t>, std::size_t> first_with_face;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> face;
        std::vector<std::size_t> common;
        bool first = true;
        for (std::size_t v = 0; v < verts.size(); ++v) {
            const auto& act = verts[v].active_set;
            if (!std::binary_search(act.begin(), act.end(), i)) continue;
            face.push_back(v);
            if (first) {
                common = act;
                first = false;
            } else {
                std::vector<std::size_t> tmp;
                std::set_intersection(common.begin(), common.end(), act.begin(), act.end(), std::back_inserter(tmp));
                common.swap(tmp);
            }
        }
        // a facet's affine hull is cut out by parallel normals only
        bool facet = !face.empty() && rank(p.a.select_cols(common)) == 1;
        if (facet && !first_with_face.emplace(face, i).second) facet = false;
        if (!facet) redundant.push_back(i);
    }
    return redundant;
}

std::vector<std::size_t> redundant_greedy(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const std::size_t n = p.facet_count();
    std::vector<bool> keep(n, true);
    std::vector<std::size_t> redundant;
    for (std::size_t i = n; i-- > 0;) {
        std::vector<std::size_t> drop;
        for (std::size_t j = 0; j < n; ++j)
            if (!keep[j] || j == i) drop.push_back(j);
        if (implied_by(p.without(drop), p.normal(i), p.b[i], opts)) {
            keep[i] = false;
            redundant.push_back(i);
        }
    }
    std::sort(redundant.begin(), redundant.end());
    return redundant;
}

}  // namespace

HalfspacePresentation HalfspacePresentation::from_normals(const std::vector<IntVector>& normals, const RatVector& b) {
    if (normals.empty()) throw Error("presentation needs at least one inequality");
    const std::size_t k = normals.front().size();
    HalfspacePresentation p;
    p.a = IntMatrix::from_rows(normals, k).transpose();
    p.b = b;
    p.validate();
    return p;
}

void HalfspacePresentation::validate() const {
    const std::size_t k = dim(), n = facet_count();
    if (k < 1) throw Error("dimension must be at least 1");
    if (n < k) throw Error("need at least as many inequalities as the dimension");
    if (b.size() != n) throw Error("offset vector length differs from the number of inequalities");
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = true;
        for (std::size_t r = 0; r < k && zero; ++r) zero = sgn(a(r, i)) == 0;
        if (zero) throw Error("normal " + std::to_string(i) + " is zero");
    }
}

RatVector HalfspacePresentation::slack(const RatVector& x) const {
    if (x.size() != dim()) throw Error("slack: dimension mismatch");
    RatVector s(facet_count());
    for (std::size_t i = 0; i < facet_count(); ++i) {
        s[i] = b[i];
        for (std::size_t r = 0; r < dim(); ++r)
            if (sgn(a(r, i)) != 0) s[i] += Rational(a(r, i)) * x[r];
    }
    return s;
}

HalfspacePresentation HalfspacePresentation::without(const std::vector<std::size_t>& drop) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < facet_count(); ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
    HalfspacePresentation q;
    q.a = a.select_cols(keep);
    for (auto i : keep) q.b.push_back(b[i]);
    return q;
}

std::vector<VertexData> enumerate_vertices(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const std::size_t k = p.dim(), n = p.facet_count();
    if (n < k || rank(p.a) < k) return {};
    if (use_gale(p, opts, k, n - k)) return vertices_gale(p, opts);
    return vertices_primal(p, opts);
}

bool has_recession_direction(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const std::size_t k = p.dim(), n = p.facet_count();
    if (rank(p.a) < k) return true;
    if (!use_gale(p, opts, k - 1, n - k + 1)) return !recession_rays(p, opts).empty();
    const IntMatrix gamma = kernel_saturated(p.a);
    check_budget(n, n - k + 1, opts);
    bool found = false;
    for_each_subset(n, n - k + 1, [&](const std::vector<std::size_t>& t) {
        const IntMatrix kt = kernel_saturated(gamma.select_cols(t));
        if (kt.rows() != 1) return true;
        const IntVector w = kt.row(0);
        const bool pos = std::all_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) >= 0; });
        const bool neg = std::all_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) <= 0; });
        found = pos || neg;
        return !found;
    });
    return found;
}

std::vector<IntVector> recession_rays(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const std::size_t k = p.dim(), n = p.facet_count();
    if (rank(p.a) < k) throw Error("recession rays need normals of full rank");
    check_budget(n, k - 1, opts);
    const IntMatrix at = p.a.transpose();
    std::set<IntVector> rays;
    for_each_subset(n, k - 1, [&](const std::vector<std::size_t>& s) {
        const IntMatrix kd = kernel_saturated(at.select_rows(s));
        if (kd.rows() != 1) return true;
        IntVector d = kd.row(0);
        const IntVector w = at * d;
        const bool pos = std::all_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) >= 0; });
        const bool neg = std::all_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) <= 0; });
        if (neg && !pos)
            for (auto& x : d) x = -x;
        if (pos || neg) rays.insert(std::move(d));
        return true;
    });
    return {rays.begin(), rays.end()};
}

PresentationReport presentation_report(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    return presentation_report(p, enumerate_vertices(p, opts), opts);
}

PresentationReport presentation_report(const HalfspacePresentation& p, const std::vector<VertexData>& verts,
                                       const EnumerationOptions& opts) {
    const std::size_t k = p.dim();
    PresentationReport rep;
    rep.vertex_count = verts.size();
    rep.bounded = rank(p.a) == k && !has_recession_direction(p, opts);

    bool full_dimensional = !verts.empty();
    if (full_dimensional) {
        std::vector<std::size_t> common = verts.front().active_set;
        for (const auto& v : verts) {
            std::vector<std::size_t> tmp;
            std::set_intersection(common.begin(), common.end(), v.active_set.begin(), v.active_set.end(),
                                  std::back_inserter(tmp));
            common.swap(tmp);
        }
        full_dimensional = common.empty();
    }
    rep.redundant_facets =
        rep.bounded && full_dimensional ? redundant_by_faces(p, verts) : redundant_greedy(p, opts);

    const auto facets = irredundant_facets(rep, p.facet_count());
    rep.simple = !verts.empty();
    rep.generic = !verts.empty();
    for (const auto& v : verts) {
        std::size_t on_facets = 0;
        for (auto i : v.active_set)
            if (std::binary_search(facets.begin(), facets.end(), i)) ++on_facets;
        if (on_facets != k) rep.simple = false;
        if (v.active_set.size() != k) rep.generic = false;
    }
    return rep;
}

std::vector<std::size_t> irredundant_facets(const PresentationReport& r, std::size_t facet_count) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facet_count; ++i)
        if (!std::binary_search(r.redundant_facets.begin(), r.redundant_facets.end(), i)) out.push_back(i);
    return out;
}

DelzantVerdict is_delzant(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const auto verts = enumerate_vertices(p, opts);
    return is_delzant(p, presentation_report(p, verts, opts), verts);
}

DelzantVerdict is_delzant(const HalfspacePresentation& p, const PresentationReport& rep,
                          const std::vector<VertexData>& vertices) {
    if (!rep.bounded || !rep.simple) throw Error("not a simple bounded presentation");
    const std::size_t k = p.dim(), n = p.facet_count();
    const auto facets = irredundant_facets(rep, n);
    // |det A_S| / covolume = |det Gamma_T| for T the complement of S
    const bool gale = n - k < k;
    const IntMatrix gamma = gale ? kernel_saturated(p.a) : IntMatrix{};
    const Integer covolume = gale ? Integer(1) : Integer(abs(determinant(row_lattice_basis(p.a.transpose()))));

    DelzantVerdict verdict;
    for (const auto& v : vertices) {
        std::vector<std::size_t> s;
        for (auto i : v.active_set)
            if (std::binary_search(facets.begin(), facets.end(), i)) s.push_back(i);
        Integer index;
        if (gale) {
            std::vector<std::size_t> t;
            for (std::size_t i = 0; i < n; ++i)
                if (!std::binary_search(s.begin(), s.end(), i)) t.push_back(i);
            index = abs(determinant(gamma.select_cols(t)));
        } else {
            index = abs(determinant(p.a.select_cols(s))) / covolume;
        }
        if (index != 1) {
            verdict.delzant = false;
            verdict.witness = v;
            verdict.witness_facets = s;
            verdict.witness_index = index;
            break;
        }
    }
    return verdict;
}

IntMatrix relation_matrix(const HalfspacePresentation& p) { return trailing_hermite_form(kernel_saturated(p.a)); }

std::optional<Rational> fano_constant(const HalfspacePresentation& p) {
    const IntMatrix gamma = relation_matrix(p);
    if (gamma.rows() == 0) return std::nullopt;
    const RatVector delta = gamma * p.b;
    const IntVector t = gamma * IntVector(p.facet_count(), Integer(1));
    std::optional<Rational> c;
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (sgn(t[j]) == 0) {
            if (sgn(delta[j]) != 0) return std::nullopt;
            continue;
        }
        const Rational cj = delta[j] / Rational(t[j]);
        if (c && *c != cj) return std::nullopt;
        c = cj;
    }
    if (!c || sgn(*c) <= 0) return std::nullopt;
    return c;
}

Incidence facet_incidence(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const auto verts = enumerate_vertices(p, opts);
    return facet_incidence(presentation_report(p, verts, opts), p.facet_count(), verts);
}

Incidence facet_incidence(const PresentationReport& rep, std::size_t facet_count, const std::vector<VertexData>& vertices) {
    if (!rep.bounded || !rep.simple) throw Error("not a simple bounded presentation");
    Incidence inc;
    inc.facets = irredundant_facets(rep, facet_count);
    for (const auto& v : vertices) {
        std::vector<std::size_t> pos;
        for (auto i : v.active_set) {
            auto it = std::lower_bound(inc.facets.begin(), inc.facets.end(), i);
            if (it != inc.facets.end() && *it == i) pos.push_back(static_cast<std::size_t>(it - inc.facets.begin()));
        }
        inc.vertices.push_back(std::move(pos));
    }
    return inc;
}

bool combinatorially_equivalent(const HalfspacePresentation& p1, const HalfspacePresentation& p2,
                                const EnumerationOptions& opts) {
    const Incidence i1 = facet_incidence(p1, opts);
    const Incidence i2 = facet_incidence(p2, opts);
    if (p1.dim() != p2.dim() || i1.facets.size() != i2.facets.size() || i1.vertices.size() != i2.vertices.size())
        return false;
    const std::size_t nf = i1.facets.size(), nv = i1.vertices.size();

    auto incidence_table = [&](const Incidence& inc) {
        std::vector<std::vector<char>> on(nv, std::vector<char>(nf, 0));
        for (std::size_t v = 0; v < nv; ++v)
            for (auto f : inc.vertices[v]) on[v][f] = 1;
        return on;
    };
    const auto on1 = incidence_table(i1);
    const auto on2 = incidence_table(i2);
    std::vector<std::size_t> deg1(nf, 0), deg2(nf, 0);
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t f = 0; f < nf; ++f) {
            deg1[f] += on1[v][f];
            deg2[f] += on2[v][f];
        }
    {
        auto s1 = deg1, s2 = deg2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }

    std::vector<std::size_t> order(nf);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg1[a] > deg1[b]; });

    // sorted projections of P1 vertex rows onto the first d ordered facets
    std::vector<std::vector<std::string>> target(nf + 1);
    {
        std::vector<std::string> keys(nv);
        for (std::size_t d = 1; d <= nf; ++d) {
            for (std::size_t v = 0; v < nv; ++v) keys[v].push_back(on1[v][order[d - 1]] ? '1' : '0');
            target[d] = keys;
            std::sort(target[d].begin(), target[d].end());
        }
    }

    std::vector<std::string> keys2(nv);
    std::vector<bool> used(nf, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == nf) return true;
        const std::size_t f = order[depth];
        for (std::size_t g = 0; g < nf; ++g) {
            if (used[g] || deg2[g] != deg1[f]) continue;
            for (std::size_t v = 0; v < nv; ++v) keys2[v].push_back(on2[v][g] ? '1' : '0');
            auto sorted = keys2;
            std::sort(sorted.begin(), sorted.end());
            if (sorted == target[depth + 1]) {
                used[g] = true;
                if (extend(depth + 1)) return true;
                used[g] = false;
            }
            for (std::size_t v = 0; v < nv; ++v) keys2[v].pop_back();
        }
        return false;
    };
    return extend(0);
}

}  // namespace toriclag
