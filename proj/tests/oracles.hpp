/**
 * Brute-force reference computations for the tests.  Deliberately share no
 * code with the library: fixed-width integers, naive algorithms, small inputs.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using i64 = long long;
using Mat = std::vector<std::vector<i64>>;

/// Exact fraction over long long, always normalized.
struct Frac {
    i64 num = 0;
    i64 den = 1;

    Frac() = default;
    Frac(i64 n, i64 d = 1) : num(n), den(d) {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
    friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
    friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
    bool zero() const { return num == 0; }
};

inline Mat random_matrix(std::mt19937_64& rng, std::size_t max_dim, i64 lo, i64 hi) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<i64> entry(lo, hi);
    const std::size_t r = dim(rng), c = dim(rng);
    Mat m(r, std::vector<i64>(c));
    for (auto& row : m)
        for (auto& x : row) x = entry(rng);
    return m;
}

/// Determinant by cofactor expansion (tiny matrices only).
inline i64 det_cofactor(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    i64 s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        Mat minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<i64> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(row);
        }
        const i64 term = m[0][c] * det_cofactor(minor);
        s += (c % 2 == 0) ? term : -term;
    }
    return s;
}

inline void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(r, n)), true);
    if (r > n) return;
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        f(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// Invariant factors from determinantal divisors: d_i = gcd of i x i minors, s_i = d_i / d_{i-1}.
inline std::vector<i64> invariant_factors_by_minors(const Mat& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    const std::size_t top = std::min(rows, cols);
    std::vector<i64> d(top + 1, 0);
    d[0] = 1;
    for (std::size_t i = 1; i <= top; ++i) {
        i64 g = 0;
        for_each_subset(rows, i, [&](const std::vector<std::size_t>& rs) {
            for_each_subset(cols, i, [&](const std::vector<std::size_t>& cs) {
                Mat sub(i, std::vector<i64>(i));
                for (std::size_t a = 0; a < i; ++a)
                    for (std::size_t b = 0; b < i; ++b) sub[a][b] = m[rs[a]][cs[b]];
                g = std::gcd(g, std::llabs(det_cofactor(sub)));
            });
        });
        d[i] = g;
    }
    std::vector<i64> s(top, 0);
    for (std::size_t i = 1; i <= top; ++i) s[i - 1] = d[i] == 0 ? 0 : d[i] / d[i - 1];
    return s;
}

/// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
inline std::tuple<i64, i64, i64> ext_gcd(i64 a, i64 b) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const i64 q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

/// Row Hermite form by 2x2 Bezout row combinations (pivots positive, entries above in [0, pivot)).
inline Mat hermite_bezout(Mat h) {
    const std::size_t rows = h.size(), cols = rows ? h[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (h[i][c] == 0) continue;
            const auto [g, x, y] = ext_gcd(h[r][c], h[i][c]);
            const i64 a = h[r][c] / g, b = h[i][c] / g;
            for (std::size_t j = 0; j < cols; ++j) {
                const i64 top = x * h[r][j] + y * h[i][j];
                const i64 bot = -b * h[r][j] + a * h[i][j];
                h[r][j] = top;
                h[i][j] = bot;
            }
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0)
            for (auto& x : h[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            i64 q = h[i][c] / h[r][c];
            if (h[i][c] - q * h[r][c] < 0) --q;
            for (std::size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
        }
        ++r;
    }
    return h;
}

/// Solves m x = v uniquely by fraction Gaussian elimination; empty optional-like result when singular.
inline bool solve_square(std::vector<std::vector<Frac>> m, std::vector<Frac> v, std::vector<Frac>& x) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].zero()) ++p;
        if (p == n) return false;
        std::swap(m[p], m[c]);
        std::swap(v[p], v[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].zero()) continue;
            const Frac f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
            v[r] = v[r] - f * v[c];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = v[i] / m[i][i];
    return true;
}

/// Vertices of {x : <a_i, x> + b_i >= 0} by solving every k-subset; a_i are rows of `normals`.
inline std::set<std::vector<Frac>> vertices(const Mat& normals, const std::vector<Frac>& b) {
    const std::size_t n = normals.size(), k = normals.front().size();
    std::set<std::vector<Frac>> out;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
        std::vector<std::vector<Frac>> m(k, std::vector<Frac>(k));
        std::vector<Frac> rhs(k);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) m[r][c] = Frac(normals[s[r]][c]);
            rhs[r] = Frac(0) - b[s[r]];
        }
        std::vector<Frac> x;
        if (!solve_square(m, rhs, x)) return;
        for (std::size_t i = 0; i < n; ++i) {
            Frac s2 = b[i];
            for (std::size_t c = 0; c < k; ++c) s2 = s2 + Frac(normals[i][c]) * x[c];
            if (s2 < Frac(0)) return;
        }
        out.insert(x);
    });
    return out;
}

/// Integer vectors in [-box, box]^n with m v = 0.
inline std::vector<std::vector<i64>> small_kernel_vectors(const Mat& m, std::size_t n, i64 box) {
    std::vector<std::vector<i64>> out;
    std::vector<i64> v(n, -box);
    for (;;) {
        bool zero_image = true;
        for (const auto& row : m) {
            i64 s = 0;
            for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
            if (s != 0) zero_image = false;
        }
        if (zero_image) out.push_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == box) v[i++] = -box;
        if (i == n) break;
        ++v[i];
    }
    return out;
}

/// Minimal index over doubled-primitive classes above a threshold, indices 2<t, lambda>.
inline i64 min_index_primitive(i64 t1, i64 t2, i64 threshold, i64 limit) {
    i64 best = -1;
    for (i64 l1 = 0; l1 <= limit; ++l1)
        for (i64 l2 = 0; l2 <= limit; ++l2) {
            if (std::gcd(l1, l2) != 1) continue;
            const i64 idx = 2 * t1 * l1 + 2 * t2 * l2;
            if (idx > threshold && (best < 0 || idx < best)) best = idx;
        }
    return best;
}

}  // namespace oracle
