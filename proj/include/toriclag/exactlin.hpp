/**
 * Exact integer and rational linear algebra.
 *
 * Everything in this header works over GMP integers/rationals: Hermite and
 * Smith normal forms with their unimodular transforms, saturated integer
 * kernels, dual lattice bases and rational system solving.  Nothing here
 * touches floating point.
 */
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toriclag {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dense row-major integer matrix.  Zero-row and zero-column shapes are valid.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector col(std::size_t c) const;
    IntMatrix transpose() const;
    IntMatrix select_rows(std::span<const std::size_t> idx) const;
    IntMatrix select_cols(std::span<const std::size_t> idx) const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
RatVector operator*(const IntMatrix& a, const RatVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Basis of a lattice of full rank in its span.  Rational so that dual bases fit.
struct LatticeBasis {
    std::vector<RatVector> vectors;

    std::size_t size() const { return vectors.size(); }
    std::size_t dimension() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

struct HermiteForm {
    IntMatrix h;  ///< row Hermite normal form
    IntMatrix u;  ///< unimodular, h = u * m
};

struct SmithForm {
    IntMatrix s;  ///< diagonal, d1 | d2 | ...
    IntMatrix u;  ///< unimodular (rows)
    IntMatrix v;  ///< unimodular (cols), s = u * m * v
};

/**
 * Row Hermite normal form.  Pivots are positive, rows below the rank are
 * zero, and every entry above a pivot lies in [0, pivot).
 */
HermiteForm hnf(const IntMatrix& m);

/// Smith normal form with both transforms.
SmithForm snf(const IntMatrix& m);

/// Diagonal of the Smith form including zeros, length min(rows, cols).
IntVector invariant_factors(const IntMatrix& m);

/**
 * Rows form a lattice basis of {v in Z^cols : m v = 0}.  Computed from the
 * Smith transform; the rows are returned in Hermite form.
 */
IntMatrix kernel_saturated(const IntMatrix& m);

/**
 * Canonical basis of the row lattice of m in "trailing" Hermite form: each
 * row's last nonzero entry is its pivot, pivots are positive and their
 * columns increase down the rows, and the other rows' entries in a pivot
 * column lie in [0, pivot).  Zero rows are dropped.
 */
IntMatrix trailing_hermite_form(const IntMatrix& m);

/// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
IntMatrix row_lattice_basis(const IntMatrix& m);

/// Dual basis: <result_i, b_j> = [i == j].  Throws on non-square or singular input.
LatticeBasis dual_basis(const LatticeBasis& b);

/// One solution of m x = v (free variables set to 0), or nullopt.
std::optional<RatVector> solve_linear(const IntMatrix& m, const RatVector& v);

std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

/// Integer vector from a rational one that happens to be integral; throws otherwise.
IntVector to_integers(const RatVector& v);
RatVector to_rationals(const IntVector& v);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);
Integer gcd_of(std::span<const Integer> values);

/// "p/q" or "p"; mpq canonical form.
std::string to_string(const Rational& q);
/// Parses "p", "-p", "p/q"; throws Error on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/**
 * Small dense rational matrix used internally for exact elimination.
 */
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    explicit RatMatrix(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    RatVector row(std::size_t r) const;
    RatMatrix transpose() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatVector operator*(const RatMatrix& a, const RatVector& v);

std::size_t rank(const RatMatrix& m);
/// Columns holding the pivots of the reduced row echelon form (a maximal independent column set).
std::vector<std::size_t> pivot_columns(const RatMatrix& m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& v);
/// The solution of m x = v when it exists and is unique, otherwise nullopt.
std::optional<RatVector> solve_unique(const RatMatrix& m, const RatVector& v);

}  // namespace toriclag
