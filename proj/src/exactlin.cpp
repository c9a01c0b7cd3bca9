#include "toriclag/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace toriclag {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged matrix literal");
        for (long x : r) entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> idx) const {
    IntMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
    return out;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols() != v.size()) throw Error("matrix-vector product: dimension mismatch");
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
    return out;
}

RatVector operator*(const IntMatrix& a, const RatVector& v) {
    if (a.cols() != v.size()) throw Error("matrix-vector product: dimension mismatch");
    RatVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0) out[i] += Rational(a(i, k)) * v[k];
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

HermiteForm hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        bool found = false;
        for (;;) {
            std::size_t piv = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (sgn(h(i, c)) == 0) continue;
                if (piv == h.rows() || mpz_cmpabs(h(i, c).get_mpz_t(), h(piv, c).get_mpz_t()) < 0) piv = i;
            }
            if (piv == h.rows()) break;
            found = true;
            h.swap_rows(r, piv);
            u.swap_rows(r, piv);
            bool cleared = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (sgn(h(i, c)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (sgn(h(i, c)) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (!found) continue;
        if (sgn(h(r, c)) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

SmithForm snf(const IntMatrix& m) {
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t diag = std::min(s.rows(), s.cols());
    for (std::size_t t = 0; t < diag; ++t) {
        bool any = false;
        for (;;) {
            // smallest nonzero entry of the trailing block moves to (t, t)
            std::size_t pi = s.rows(), pj = s.cols();
            for (std::size_t i = t; i < s.rows(); ++i)
                for (std::size_t j = t; j < s.cols(); ++j) {
                    if (sgn(s(i, j)) == 0) continue;
                    if (pi == s.rows() || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == s.rows()) break;
            any = true;
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (sgn(s(i, t)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (sgn(s(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (sgn(s(t, j)) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (sgn(s(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            std::size_t bad = s.rows();
            for (std::size_t i = t + 1; i < s.rows() && bad == s.rows(); ++i)
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == s.rows()) break;
            s.add_row_multiple(t, bad, Integer(1));
            u.add_row_multiple(t, bad, Integer(1));
        }
        if (!any) break;
        if (sgn(s(t, t)) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(s), std::move(u), std::move(v)};
}

IntVector invariant_factors(const IntMatrix& m) {
    const SmithForm f = snf(m);
    const std::size_t diag = std::min(m.rows(), m.cols());
    IntVector d(diag);
    for (std::size_t i = 0; i < diag; ++i) d[i] = f.s(i, i);
    return d;
}

IntMatrix row_lattice_basis(const IntMatrix& m) {
    const IntMatrix h = hnf(m).h;
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < h.cols() && zero; ++c) zero = sgn(h(r, c)) == 0;
        if (!zero) keep.push_back(r);
    }
    return h.select_rows(keep);
}

IntMatrix kernel_saturated(const IntMatrix& m) {
    const SmithForm f = snf(m);
    std::size_t r = 0;
    while (r < std::min(m.rows(), m.cols()) && sgn(f.s(r, r)) != 0) ++r;
    IntMatrix k(m.cols() - r, m.cols());
    for (std::size_t i = r; i < m.cols(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) k(i - r, c) = f.v(c, i);
    if (k.rows() == 0) return k;
    return row_lattice_basis(k);
}

IntMatrix trailing_hermite_form(const IntMatrix& m) {
    const std::size_t n = m.cols();
    IntMatrix rev(m.rows(), n);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) rev(r, n - 1 - c) = m(r, c);
    const IntMatrix b = row_lattice_basis(rev);
    IntMatrix out(b.rows(), n);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) out(b.rows() - 1 - r, n - 1 - c) = b(r, c);
    return out;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = Rational(m(r, c));
}

RatVector RatMatrix::row(std::size_t r) const {
    return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols() != v.size()) throw Error("matrix-vector product: dimension mismatch");
    RatVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t solve_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < solve_cols && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a, a.cols()).size();
}

std::size_t rank(const IntMatrix& m) { return rank(RatMatrix(m)); }

std::vector<std::size_t> pivot_columns(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a, a.cols());
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    if (rref(a, n).size() != n) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
    return inv;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& v) {
    if (v.size() != m.rows()) throw Error("solve_linear: dimension mismatch");
    RatMatrix a(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
        a(i, m.cols()) = v[i];
    }
    const auto pivots = rref(a, m.cols());
    for (std::size_t i = pivots.size(); i < a.rows(); ++i)
        if (sgn(a(i, m.cols())) != 0) return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a(i, m.cols());
    return x;
}

std::optional<RatVector> solve_unique(const RatMatrix& m, const RatVector& v) {
    if (v.size() != m.rows()) throw Error("solve_unique: dimension mismatch");
    RatMatrix a(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
        a(i, m.cols()) = v[i];
    }
    const auto pivots = rref(a, m.cols());
    if (pivots.size() != m.cols()) return std::nullopt;
    for (std::size_t i = pivots.size(); i < a.rows(); ++i)
        if (sgn(a(i, m.cols())) != 0) return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[i] = a(i, m.cols());
    return x;
}

std::optional<RatVector> solve_linear(const IntMatrix& m, const RatVector& v) {
    return solve_linear(RatMatrix(m), v);
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

LatticeBasis dual_basis(const LatticeBasis& b) {
    const std::size_t d = b.size();
    if (d == 0) return {};
    RatMatrix bt(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        if (b.vectors[j].size() != d) throw Error("not a full-rank lattice basis");
        for (std::size_t i = 0; i < d; ++i) bt(i, j) = b.vectors[j][i];
    }
    const auto inv = inverse(bt);
    if (!inv) throw Error("not a full-rank lattice basis");
    LatticeBasis out;
    for (std::size_t i = 0; i < d; ++i) out.vectors.push_back(inv->row(i));
    return out;
}

IntVector to_integers(const RatVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw Error("expected an integral vector, got " + to_string(v[i]));
        out[i] = v[i].get_num();
    }
    return out;
}

RatVector to_rationals(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer gcd_of(std::span<const Integer> values) {
    Integer g = 0;
    for (const auto& x : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string_view s = text;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
        throw Error("malformed rational '" + text + "'");
    Integer n{std::string(num)}, d{1};
    if (slash != std::string_view::npos) d = Integer{std::string(den)};
    if (sgn(d) == 0) throw Error("zero denominator in '" + text + "'");
    if (s.front() == '-') n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace toriclag
