#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zsum {

// Arbitrary-precision integers throughout the lattice layer: row reduction and
// transform bookkeeping must never wrap regardless of input magnitudes.
using Int = boost::multiprecision::cpp_int;
using SignedVector = std::vector<Int>;

/// A rectangular integer matrix. Rows all share the same width; the width is
/// meaningful even when there are no rows.
class IntMatrix {
public:
    IntMatrix() = default;

    explicit IntMatrix(std::size_t width) : width_(width) {}

    IntMatrix(std::vector<SignedVector> rows, std::size_t width)
        : rows_(std::move(rows)), width_(width) {
        for (const auto& r : rows_)
            if (r.size() != width_)
                throw std::invalid_argument("matrix rows must all have the stated width");
    }

    static IntMatrix identity(std::size_t n) {
        std::vector<SignedVector> rows(n, SignedVector(n, 0));
        for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
        return IntMatrix(std::move(rows), n);
    }

    std::size_t row_count() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<SignedVector>& rows() const { return rows_; }
    const SignedVector& row(std::size_t i) const { return rows_.at(i); }

    void append_row(SignedVector r) {
        if (r.size() != width_)
            throw std::invalid_argument("appended row has the wrong width");
        rows_.push_back(std::move(r));
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::vector<SignedVector> rows_;
    std::size_t width_ = 0;
};

namespace detail {

inline void row_axpy(SignedVector& dst, const Int& c, const SignedVector& src) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += c * src[j];
}

// Quotient with minimal absolute remainder: |a - q*b| <= |b|/2. Keeps
// intermediate entries (and the transform) small during reduction.
inline Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    Int r = a - q * b;
    Int abs_b = b < 0 ? Int(-b) : b;
    Int abs_r = r < 0 ? Int(-r) : r;
    if (2 * abs_r > abs_b) {
        if ((r < 0) == (b < 0))
            q += 1;
        else
            q -= 1;
    }
    return q;
}

// Floor quotient for b > 0: remainder lands in [0, b).
inline Int floor_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    if (a - q * b < 0) q -= 1;
    return q;
}

}  // namespace detail

/// The Z-row-span of an integer matrix in canonical row-style normal form:
/// basis rows are nonzero and in echelon order, pivots are positive, and every
/// entry above a pivot is reduced into [0, pivot). The canonical form is unique
/// for a given row span, so lattice equality is decidable by comparing bases.
/// `transform` certifies each basis row as an integer combination of the
/// original input rows: basis = transform * original.
class IntLattice {
public:
    IntLattice(IntMatrix basis, IntMatrix transform, IntMatrix original,
               std::vector<std::size_t> pivot_cols)
        : basis_(std::move(basis)),
          transform_(std::move(transform)),
          original_(std::move(original)),
          pivot_cols_(std::move(pivot_cols)) {}

    const IntMatrix& basis() const { return basis_; }
    const IntMatrix& transform() const { return transform_; }
    const IntMatrix& original_rows() const { return original_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
    std::size_t rank() const { return basis_.row_count(); }
    std::size_t width() const { return basis_.width(); }

private:
    IntMatrix basis_;
    IntMatrix transform_;
    IntMatrix original_;
    std::vector<std::size_t> pivot_cols_;
};

/// Canonical normal form of the Z-row-span of M, with transform certificate.
/// Zero rows never become basis rows; the empty matrix yields the zero lattice.
inline IntLattice normal_form(const IntMatrix& M) {
    const std::size_t m = M.row_count();
    const std::size_t w = M.width();
    std::vector<SignedVector> A = M.rows();
    std::vector<SignedVector> U = IntMatrix::identity(m).rows();

    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < w && row < m; ++col) {
        // Gcd-eliminate the column below `row` via minimal-remainder steps.
        while (true) {
            std::size_t best = m;
            for (std::size_t r = row; r < m; ++r) {
                if (A[r][col] == 0) continue;
                if (best == m || boost::multiprecision::abs(A[r][col]) <
                                     boost::multiprecision::abs(A[best][col]))
                    best = r;
            }
            if (best == m) break;  // column is zero from `row` down
            std::swap(A[row], A[best]);
            std::swap(U[row], U[best]);
            bool any_left = false;
            for (std::size_t r = row + 1; r < m; ++r) {
                if (A[r][col] == 0) continue;
                Int q = detail::nearest_quotient(A[r][col], A[row][col]);
                detail::row_axpy(A[r], -q, A[row]);
                detail::row_axpy(U[r], -q, U[row]);
                if (A[r][col] != 0) any_left = true;
            }
            if (!any_left) {
                if (A[row][col] < 0) {
                    for (auto& x : A[row]) x = -x;
                    for (auto& x : U[row]) x = -x;
                }
                // Reduce the entries above the pivot into [0, pivot).
                for (std::size_t j = 0; j < row; ++j) {
                    if (A[j][col] == 0) continue;
                    Int q = detail::floor_quotient(A[j][col], A[row][col]);
                    if (q != 0) {
                        detail::row_axpy(A[j], -q, A[row]);
                        detail::row_axpy(U[j], -q, U[row]);
                    }
                }
                pivots.push_back(col);
                ++row;
                break;
            }
        }
    }

    std::vector<SignedVector> basis_rows(A.begin(), A.begin() + row);
    std::vector<SignedVector> transform_rows(U.begin(), U.begin() + row);
    return IntLattice(IntMatrix(std::move(basis_rows), w),
                      IntMatrix(std::move(transform_rows), m), M, std::move(pivots));
}

namespace detail {

// Reduces v against the echelon basis; returns the per-basis-row quotients if
// v lies in the span, nothing otherwise.
inline std::optional<std::vector<Int>> reduce_against_basis(const IntLattice& L,
                                                            SignedVector v) {
    const auto& basis = L.basis();
    const auto& pivots = L.pivot_columns();
    std::vector<Int> q(basis.row_count(), 0);
    for (std::size_t i = 0; i < basis.row_count(); ++i) {
        const Int& pivot = basis.row(i)[pivots[i]];
        const Int& entry = v[pivots[i]];
        if (entry == 0) continue;
        if (entry % pivot != 0) return std::nullopt;
        Int qi = entry / pivot;
        row_axpy(v, -qi, basis.row(i));
        q[i] = qi;
    }
    for (const Int& x : v)
        if (x != 0) return std::nullopt;
    return q;
}

}  // namespace detail

/// Membership of v in the Z-row-span, decided by echelon reduction with exact
/// divisibility checks at each pivot.
inline bool contains(const IntLattice& L, const SignedVector& v) {
    if (v.size() != L.width())
        throw std::invalid_argument("vector width does not match the lattice");
    return detail::reduce_against_basis(L, v).has_value();
}

/// Integer coefficients over the ORIGINAL generating rows with
/// sum(lambda_i * row_i) = v, or nothing if v is not a member ("not a member"
/// is a normal outcome, not an error). Every returned witness is re-verified
/// by exact re-multiplication before it leaves this function.
inline std::optional<std::vector<Int>> witness(const IntLattice& L, const SignedVector& v) {
    if (v.size() != L.width())
        throw std::invalid_argument("vector width does not match the lattice");
    auto q = detail::reduce_against_basis(L, v);
    if (!q) return std::nullopt;

    const auto& transform = L.transform();
    std::vector<Int> lambda(L.original_rows().row_count(), 0);
    for (std::size_t i = 0; i < transform.row_count(); ++i)
        if ((*q)[i] != 0)
            for (std::size_t j = 0; j < lambda.size(); ++j)
                lambda[j] += (*q)[i] * transform.row(i)[j];

    SignedVector check(L.width(), 0);
    for (std::size_t j = 0; j < lambda.size(); ++j)
        if (lambda[j] != 0) detail::row_axpy(check, lambda[j], L.original_rows().row(j));
    if (check != v)
        throw std::logic_error("witness re-multiplication failed; lattice engine bug");
    return lambda;
}

}  // namespace zsum
