#pragma once

#include "pst/poly.hpp"
#include "pst/scalar.hpp"

#include <optional>
#include <vector>

namespace pst {

using Vec = std::vector<Scalar>;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Scalar(0)) {}

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows, int ncols);

    Vec row(int i) const;
    bool is_zero() const;
};

Mat operator*(const Mat& A, const Mat& B);
Mat operator+(const Mat& A, const Mat& B);
Mat operator-(const Mat& A, const Mat& B);
Mat scale(const Mat& A, const Scalar& c);
bool operator==(const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
Scalar trace(const Mat& A);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& a);
// row vector times matrix
Vec vec_mat(const Vec& v, const Mat& A);
Scalar dot(const Vec& a, const Vec& b);

/// Reduced row echelon form computed by exact field elimination; pivots are
/// chosen within each column by minimal scalar bit-size to damp coefficient
/// growth. Returns pivot column indices.
struct Rref {
    Mat m;
    std::vector<int> pivots;
    int rank() const { return static_cast<int>(pivots.size()); }
};
Rref rref(Mat A);

/// Solve M x = b over the field; empty optional when inconsistent.
/// The particular solution sets all free variables to zero.
std::optional<Vec> solve(const Mat& M, const Vec& b);

/// Canonical (reduced echelon) basis of the right kernel {x : M x = 0}.
std::vector<Vec> nullspace(const Mat& M);

int rank(const Mat& M);
std::optional<Mat> inverse(const Mat& M);

/// Monic characteristic polynomial, lowest degree first (Faddeev-LeVerrier).
SPoly char_poly(const Mat& M);

/// Monic minimal polynomial via the first linear dependence among powers.
SPoly min_poly(const Mat& M);

Mat eval_poly_at(const SPoly& p, const Mat& M);

// ---------------------------------------------------------------------------
// Row-space subspaces in canonical form; equality of subspaces is coordinate
// equality of the canonical bases.

struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis;  // rref rows, no zero rows

    int dim() const { return static_cast<int>(basis.size()); }
};

Subspace span_of(const std::vector<Vec>& vectors, int ambient);
Subspace span_rows(const Mat& A);
bool contains(const Subspace& S, const Vec& v);
bool subspace_le(const Subspace& A, const Subspace& B);
bool subspace_eq(const Subspace& A, const Subspace& B);
Subspace subspace_sum(const Subspace& A, const Subspace& B);
Subspace subspace_intersect(const Subspace& A, const Subspace& B);

/// Coordinates of v in the given independent spanning set; empty if outside.
std::optional<Vec> coords_in(const std::vector<Vec>& basis, const Vec& v);

/// Extend `basis` (independent) to a basis of the ambient space using
/// standard unit vectors, chosen greedily in index order.
std::vector<Vec> extend_basis(const std::vector<Vec>& basis, int ambient);

}  // namespace pst
