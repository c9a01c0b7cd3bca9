#include "toriclag/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace toriclag {

namespace {

std::string sphere_product(const std::vector<std::size_t>& dims) {
    std::string s;
    for (auto d : dims) s += "S^" + std::to_string(d) + " x ";
    return s + "T^2";
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(what);
}

/// Index coefficients (c1, c2) of a branch: index = c1 lambda1 + c2 lambda2.
std::pair<long, long> coefficients(const FamilyModel& f, Branch b) {
    if (f.kind == FamilyKind::simplex_product) {
        if (b == Branch::A) return {2 * f.p, 2 * (f.n - f.p + f.k)};
        return {2 * f.p, 2 * (f.n - 2 * f.p + f.k)};
    }
    if (b == Branch::A) return {4 * f.p, 2 * f.p * (f.k + 2)};
    return {4 * f.p, 2 * f.p * (2 - f.k)};
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::simplex_product: return "simplex_product";
        case FamilyKind::stretched: return "stretched";
        case FamilyKind::trapezoid: return "trapezoid";
    }
    return "unknown";
}

std::vector<std::pair<std::size_t, std::pair<long, long>>> FamilyModel::blocks() const {
    const auto up = static_cast<std::size_t>(p);
    if (kind == FamilyKind::simplex_product) {
        const auto uk = static_cast<std::size_t>(k), un = static_cast<std::size_t>(n);
        return {{uk, {1, 1}}, {up - uk, {1, 0}}, {un - up, {0, 1}}};
    }
    return {{up, {0, 1}}, {up, {1, k}}, {up, {1, 0}}, {up, {0, 1}}};
}

HalfspacePresentation simplex_product_presentation(long n, long p, long k) {
    require(p >= 2 && n - p >= 2 && k >= 0 && k <= p, "simplex-product presentation needs p >= 2, n - p >= 2, 0 <= k <= p");
    // facet order matches the quadric columns: p-block (last one -x_1..-x_{p-1}), then the rest
    const auto dim = static_cast<std::size_t>(n - 2);
    std::vector<IntVector> normals;
    auto unit = [&](std::size_t i) {
        IntVector a(dim);
        a[i] = 1;
        return a;
    };
    for (long i = 0; i < p - 1; ++i) normals.push_back(unit(static_cast<std::size_t>(i)));
    IntVector first(dim);
    for (long i = 0; i < p - 1; ++i) first[static_cast<std::size_t>(i)] = -1;
    normals.push_back(first);
    for (long i = p - 1; i < n - 2; ++i) normals.push_back(unit(static_cast<std::size_t>(i)));
    IntVector second(dim);
    for (long i = 0; i < k; ++i) second[static_cast<std::size_t>(i)] = -1;
    for (long i = p - 1; i < n - 2; ++i) second[static_cast<std::size_t>(i)] = -1;
    normals.push_back(second);
    return HalfspacePresentation::from_normals(normals, RatVector(static_cast<std::size_t>(n), Rational(1)));
}

HalfspacePresentation simplex_product_displayed_presentation(long n, long p, long k) {
    require(p >= 1 && n > p && k >= 0 && k <= p, "displayed presentation needs 1 <= p < n, 0 <= k <= p");
    const auto dim = static_cast<std::size_t>(n);
    std::vector<IntVector> normals;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector a(dim);
        a[i] = 1;
        normals.push_back(a);
    }
    IntVector first(dim), second(dim);
    for (long i = 0; i < p; ++i) first[static_cast<std::size_t>(i)] = -1;
    for (long i = 0; i < k; ++i) second[static_cast<std::size_t>(i)] = -1;
    for (long i = p; i < n; ++i) second[static_cast<std::size_t>(i)] = -1;
    normals.push_back(first);
    normals.push_back(second);
    return HalfspacePresentation::from_normals(normals, RatVector(dim + 2, Rational(1)));
}

QuadricSystem stretched_quadrics(long p, long k) {
    require(p >= 1 && k >= 0, "stretched family needs p >= 1, k >= 0");
    const auto up = static_cast<std::size_t>(p);
    QuadricSystem q;
    q.gamma = IntMatrix(2, 4 * up);
    for (std::size_t i = 0; i < up; ++i) {
        q.gamma(0, up + i) = 1;
        q.gamma(0, 2 * up + i) = 1;
        q.gamma(1, i) = 1;
        q.gamma(1, up + i) = k;
        q.gamma(1, 3 * up + i) = 1;
    }
    q.delta = {Rational(1), Rational(k + 1)};
    return q;
}

HalfspacePresentation stretched_presentation(long p, long k) {
    const QuadricSystem q = stretched_quadrics(p, k);
    if (p == 1)
        return HalfspacePresentation::from_normals({{1, 0}, {0, 1}, {0, -1}, {-1, -k}},
                                                   {Rational(0), Rational(0), Rational(1), Rational(k + 1)});
    const auto up = static_cast<std::size_t>(p);
    HalfspacePresentation pres;
    pres.a = kernel_saturated(q.gamma);
    pres.b = RatVector(4 * up);
    pres.b[2 * up] = 1;
    pres.b[3 * up] = k + 1;
    pres.validate();
    return pres;
}

FamilyModel simplex_product_family(long n, long p, long k, const EnumerationOptions& opts) {
    require(n >= 2 * p && p >= 2 && k >= 0 && k < p - 1, "simplex-product family needs n >= 2p and 0 <= k < p - 1");
    FamilyModel f;
    f.kind = FamilyKind::simplex_product;
    f.n = n;
    f.p = p;
    f.k = k;
    f.all_even = n % 2 == 0 && p % 2 == 0 && k % 2 == 0;
    f.theorem_range = f.all_even && n > 2 * p && p > 3;
    f.model = build_model(simplex_product_presentation(n, p, k), opts);
    f.index_threshold = 2 * (n - p) - 1;
    if (f.all_even) {
        f.diffeo_sphere_dims = {static_cast<std::size_t>(p - 1), static_cast<std::size_t>(n - p - 1)};
        f.diffeo_type = sphere_product(f.diffeo_sphere_dims);
    }
    return f;
}

FamilyModel stretched_family(long p, long k, const EnumerationOptions& opts) {
    require(p >= 1 && k >= 0, "stretched family needs p >= 1, k >= 0");
    FamilyModel f;
    f.kind = p == 1 ? FamilyKind::trapezoid : FamilyKind::stretched;
    f.n = 4 * p;
    f.p = p;
    f.k = k;
    f.all_even = k % 2 == 0;
    f.theorem_range = p > 1 && k % 2 == 0 && k > 2;
    f.model = build_model(stretched_presentation(p, k), opts);
    f.index_threshold = 4 * p;
    if (k % 2 == 0) {
        if (p > 1) {
            const auto d = static_cast<std::size_t>(2 * p - 1);
            f.diffeo_sphere_dims = {d, d};
            f.diffeo_type = sphere_product(f.diffeo_sphere_dims);
        } else {
            f.diffeo_sphere_dims = {1, 1};
            f.diffeo_type = "T^4";
        }
    }
    return f;
}

DiscClass disc_class(const FamilyModel& f, Branch branch, long lambda1, long lambda2) {
    if (lambda1 < 0 || lambda2 < 0) throw Error("disc exponents must be nonnegative");
    const auto [c1, c2] = coefficients(f, branch);
    DiscClass d;
    d.branch = branch;
    d.lambda1 = lambda1;
    d.lambda2 = lambda2;
    d.index = Integer(c1) * lambda1 + Integer(c2) * lambda2;
    const long shift = f.kind == FamilyKind::simplex_product ? 1 : f.k;
    if (branch == Branch::A) d.boundary = {Integer(2 * lambda1), Integer(2 * lambda2)};
    else d.boundary = {Integer(2 * lambda1) - Integer(2 * shift) * lambda2, Integer(2 * lambda2)};
    d.generic_point = branch == Branch::A;
    return d;
}

std::vector<DiscClass> disc_spectrum(const FamilyModel& f, long index_bound, std::optional<long> lambda_cap) {
    long cap = 1;
    if (lambda_cap) {
        cap = *lambda_cap;
    } else {
        long min_pos = 0;
        for (Branch b : {Branch::A, Branch::B}) {
            const auto [c1, c2] = coefficients(f, b);
            for (long c : {c1, c2})
                if (c > 0 && (min_pos == 0 || c < min_pos)) min_pos = c;
        }
        if (min_pos > 0 && index_bound > 0) cap = std::max(cap, index_bound / min_pos);
    }
    std::vector<DiscClass> out;
    for (Branch b : {Branch::A, Branch::B})
        for (long l1 = 0; l1 <= cap; ++l1)
            for (long l2 = 0; l2 <= cap; ++l2) {
                DiscClass d = disc_class(f, b, l1, l2);
                if (d.index <= index_bound) out.push_back(std::move(d));
            }
    std::sort(out.begin(), out.end(), [](const DiscClass& x, const DiscClass& y) {
        return std::tuple(x.index, x.branch, x.lambda1, x.lambda2) < std::tuple(y.index, y.branch, y.lambda1, y.lambda2);
    });
    return out;
}

std::optional<Integer> closed_form_m(const FamilyModel& f) {
    if (f.kind == FamilyKind::simplex_product) {
        if (f.n > 2 * f.p) return Integer(2 * (f.n - f.p + f.k));
        return std::nullopt;
    }
    if (f.k >= 1) return Integer(2 * f.p * (f.k + 2));
    return std::nullopt;
}

namespace {

std::optional<DiscClass> minimal_k_class(const FamilyModel& f, long bound) {
    const auto [c1, c2] = coefficients(f, Branch::A);
    std::optional<DiscClass> best;
    for (long l1 = 0; l1 <= floor_div(bound, c1); ++l1)
        for (long l2 = 0; l2 <= floor_div(bound, c2); ++l2) {
            if (std::gcd(l1, l2) != 1) continue;
            DiscClass d = disc_class(f, Branch::A, l1, l2);
            if (d.index > bound || d.index <= f.index_threshold) continue;
            if (!best || d.index < best->index) best = std::move(d);
        }
    return best;
}

}  // namespace

InvariantReport invariant_m(const FamilyModel& f, std::optional<long> index_bound) {
    InvariantReport rep;
    rep.threshold = f.index_threshold;
    rep.closed_form = closed_form_m(f);
    long bound;
    if (index_bound) {
        bound = *index_bound;
    } else {
        long base = f.index_threshold;
        if (rep.closed_form) base = std::max(base, rep.closed_form->get_si());
        bound = 4 * base;
    }
    auto best = minimal_k_class(f, bound);
    if (!best && index_bound && rep.closed_form) {
        bound = std::max(bound, 2 * rep.closed_form->get_si());
        best = minimal_k_class(f, bound);
    }
    if (!best) throw Error("bound too small");
    rep.bound = bound;
    rep.m = best->index;
    rep.witness = *best;
    rep.doubled_primitive = std::gcd(best->lambda1, best->lambda2) == 1 && best->boundary.first == 2 * best->lambda1 &&
                            best->boundary.second == 2 * best->lambda2;
    return rep;
}

DistinguishReport distinguish(const std::vector<FamilyModel>& fs) {
    if (fs.empty()) throw Error("nothing to compare");
    auto kind_class = [](FamilyKind k) { return k == FamilyKind::simplex_product ? 0 : 1; };
    for (const auto& f : fs)
        if (kind_class(f.kind) != kind_class(fs.front().kind) || f.n != fs.front().n || f.p != fs.front().p)
            throw Error("mixed incompatible parameters");

    DistinguishReport rep;
    rep.kind = fs.front().kind;
    using Key = std::tuple<std::optional<std::string>, Integer, Integer>;
    std::map<Key, std::set<long>> groups;
    rep.hypotheses_hold = true;
    for (const auto& f : fs) {
        groups[Key{f.diffeo_type, minimal_maslov(f.model), invariant_m(f).m}].insert(f.k);
        rep.hypotheses_hold = rep.hypotheses_hold && f.theorem_range;
    }
    for (const auto& [key, ks] : groups)
        rep.classes.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), {ks.begin(), ks.end()}});

    if (rep.hypotheses_hold) {
        std::set<std::tuple<long, long, std::string>> pairs;
        for (std::size_t a = 0; a < rep.classes.size(); ++a)
            for (std::size_t b = a + 1; b < rep.classes.size(); ++b) {
                const auto& ca = rep.classes[a];
                const auto& cb = rep.classes[b];
                if (!ca.diffeo_type || ca.diffeo_type != cb.diffeo_type || ca.m == cb.m) continue;
                for (long k1 : ca.ks)
                    for (long k2 : cb.ks) pairs.emplace(std::min(k1, k2), std::max(k1, k2), *ca.diffeo_type);
            }
        for (const auto& [k1, k2, d] : pairs) rep.non_isotopic.push_back({k1, k2, d});
        if (rep.kind == FamilyKind::simplex_product) rep.guaranteed_classes = fs.front().p / 2;
    }
    return rep;
}

Integer smooth_isotopy_class_count(const FamilyModel& f) {
    if (!f.diffeo_type) throw Error("H_1 unknown: no diffeomorphism certificate");
    if (f.n % 2 != 0) throw Error("isotopy count is only available in even complex dimension");
    // T^2 factor contributes rank 2; circles among the sphere factors add one each
    unsigned long rank = 2;
    for (auto d : f.diffeo_sphere_dims)
        if (d == 1) ++rank;
    Integer count = 1;
    mpz_mul_2exp(count.get_mpz_t(), count.get_mpz_t(), rank);
    return count;
}

}  // namespace toriclag
