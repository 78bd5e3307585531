#include "pst/linalg.hpp"

#include <algorithm>

namespace pst {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int ncols) {
    Mat m(static_cast<int>(rows.size()), ncols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != ncols)
            throw std::invalid_argument("row length mismatch");
        for (int j = 0; j < ncols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(int i) const {
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Mat operator*(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix product dimension mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Scalar& aik = A.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                const Scalar& bkj = B.at(k, j);
                if (bkj.is_zero()) continue;
                C.at(i, j) += aik * bkj;
            }
        }
    return C;
}

Mat operator+(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("matrix sum dimension mismatch");
    Mat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

Mat operator-(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("matrix sum dimension mismatch");
    Mat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

Mat scale(const Mat& A, const Scalar& c) {
    Mat C = A;
    for (auto& x : C.a) x *= c;
    return C;
}

bool operator==(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) return false;
    for (size_t i = 0; i < A.a.size(); ++i)
        if (!(A.a[i] == B.a[i])) return false;
    return true;
}

Mat transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Scalar trace(const Mat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("trace of non-square matrix");
    Scalar t(0);
    for (int i = 0; i < A.rows; ++i) t += A.at(i, i);
    return t;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_mat(const Vec& v, const Mat& A) {
    if (static_cast<int>(v.size()) != A.rows) throw std::invalid_argument("vec*mat dimension mismatch");
    Vec r(A.cols, Scalar(0));
    for (int i = 0; i < A.rows; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < A.cols; ++j) {
            const Scalar& aij = A.at(i, j);
            if (!aij.is_zero()) r[j] += v[i] * aij;
        }
    }
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
    Scalar s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rref rref(Mat A) {
    Rref out;
    int r = 0;
    for (int col = 0; col < A.cols && r < A.rows; ++col) {
        int best = -1;
        size_t best_size = 0;
        for (int i = r; i < A.rows; ++i) {
            if (A.at(i, col).is_zero()) continue;
            size_t sz = A.at(i, col).bitsize();
            if (best < 0 || sz < best_size) { best = i; best_size = sz; }
        }
        if (best < 0) continue;
        for (int j = 0; j < A.cols; ++j) std::swap(A.at(r, j), A.at(best, j));
        Scalar inv = A.at(r, col).inverse();
        for (int j = col; j < A.cols; ++j) A.at(r, j) *= inv;
        for (int i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            Scalar f = A.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < A.cols; ++j) A.at(i, j) -= f * A.at(r, j);
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.m = std::move(A);
    return out;
}

std::optional<Vec> solve(const Mat& M, const Vec& b) {
    if (static_cast<int>(b.size()) != M.rows)
        throw std::invalid_argument("solve: rhs length != row count");
    Mat aug(M.rows, M.cols + 1);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols) = b[i];
    }
    Rref r = rref(std::move(aug));
    for (int p : r.pivots)
        if (p == M.cols) return std::nullopt;  // inconsistent
    Vec x(M.cols, Scalar(0));
    for (size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.m.at(static_cast<int>(k), M.cols);
    return x;
}

std::vector<Vec> nullspace(const Mat& M) {
    Rref r = rref(M);
    std::vector<bool> is_pivot(M.cols, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int j = 0; j < M.cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(M.cols, Scalar(0));
        v[j] = Scalar(1);
        for (size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.m.at(static_cast<int>(k), j);
        basis.push_back(std::move(v));
    }
    // canonicalize
    if (basis.empty()) return basis;
    Rref c = rref(Mat::from_rows(basis, M.cols));
    std::vector<Vec> out;
    for (int i = 0; i < c.rank(); ++i) out.push_back(c.m.row(i));
    return out;
}

int rank(const Mat& M) { return rref(M).rank(); }

std::optional<Mat> inverse(const Mat& M) {
    if (M.rows != M.cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = M.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    Rref r = rref(std::move(aug));
    if (r.rank() < n || r.pivots[n - 1] >= n) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

SPoly char_poly(const Mat& M) {
    if (M.rows != M.cols) throw std::invalid_argument("char_poly of non-square matrix");
    int n = M.rows;
    // Faddeev-LeVerrier: M_1 = M, c_{n-1} = -tr, M_{k+1} = M (M_k + c I)
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = Scalar(1);
    Mat Mk = M;
    for (int k = 1; k <= n; ++k) {
        Scalar ck = trace(Mk) / Scalar(static_cast<long>(k));
        c[n - k] = -ck;
        if (k < n) {
            Mat adj = Mk;
            for (int i = 0; i < n; ++i) adj.at(i, i) -= ck;
            Mk = M * adj;
        }
    }
    return c;
}

SPoly min_poly(const Mat& M) {
    if (M.rows != M.cols) throw std::invalid_argument("min_poly of non-square matrix");
    int n = M.rows;
    // stack vec(I), vec(M), vec(M^2), ... until dependent
    std::vector<Vec> rows;
    Mat P = Mat::identity(n);
    for (int k = 0; k <= n; ++k) {
        rows.push_back(P.a);
        Mat sys = transpose(Mat::from_rows(rows, n * n));
        auto ker = nullspace(sys);
        if (!ker.empty()) {
            // smallest-degree relation: kernel vector with last coordinate involved;
            // since previous iteration had no kernel, any kernel vector has a
            // nonzero top coefficient
            Vec rel = ker[0];
            SPoly p(rel.begin(), rel.end());
            return sp_monic(p);
        }
        P = P * M;
    }
    throw std::logic_error("minimal polynomial not found");
}

Mat eval_poly_at(const SPoly& p, const Mat& M) {
    int n = M.rows;
    Mat acc(n, n);
    for (int i = sp_deg(p); i >= 0; --i) {
        acc = acc * M;
        for (int d = 0; d < n; ++d) acc.at(d, d) += p[i];
    }
    return acc;
}

Subspace span_of(const std::vector<Vec>& vectors, int ambient) {
    Subspace s;
    s.ambient = ambient;
    if (vectors.empty()) return s;
    Rref r = rref(Mat::from_rows(vectors, ambient));
    for (int i = 0; i < r.rank(); ++i) s.basis.push_back(r.m.row(i));
    return s;
}

Subspace span_rows(const Mat& A) {
    std::vector<Vec> rows;
    for (int i = 0; i < A.rows; ++i) rows.push_back(A.row(i));
    return span_of(rows, A.cols);
}

bool contains(const Subspace& S, const Vec& v) {
    // reduce v against the rref basis
    Vec w = v;
    for (const auto& b : S.basis) {
        int lead = -1;
        for (int j = 0; j < S.ambient; ++j)
            if (!b[j].is_zero()) { lead = j; break; }
        if (lead < 0) continue;
        if (!w[lead].is_zero()) w = vec_sub(w, vec_scale(b, w[lead]));
    }
    return vec_is_zero(w);
}

bool subspace_le(const Subspace& A, const Subspace& B) {
    for (const auto& v : A.basis)
        if (!contains(B, v)) return false;
    return true;
}

bool subspace_eq(const Subspace& A, const Subspace& B) {
    if (A.ambient != B.ambient || A.dim() != B.dim()) return false;
    for (size_t i = 0; i < A.basis.size(); ++i)
        if (A.basis[i] != B.basis[i]) return false;
    return true;
}

Subspace subspace_sum(const Subspace& A, const Subspace& B) {
    std::vector<Vec> all = A.basis;
    all.insert(all.end(), B.basis.begin(), B.basis.end());
    return span_of(all, A.ambient);
}

Subspace subspace_intersect(const Subspace& A, const Subspace& B) {
    if (A.ambient != B.ambient) throw std::invalid_argument("ambient mismatch");
    if (A.basis.empty() || B.basis.empty()) return Subspace{A.ambient, {}};
    // x U = y V  ->  [U^T | -V^T] (x,y)^T = 0
    int n = A.ambient;
    int da = A.dim(), db = B.dim();
    Mat sys(n, da + db);
    for (int j = 0; j < da; ++j)
        for (int i = 0; i < n; ++i) sys.at(i, j) = A.basis[j][i];
    for (int j = 0; j < db; ++j)
        for (int i = 0; i < n; ++i) sys.at(i, da + j) = -B.basis[j][i];
    std::vector<Vec> gens;
    for (const auto& k : nullspace(sys)) {
        Vec v(n, Scalar(0));
        for (int j = 0; j < da; ++j)
            if (!k[j].is_zero()) v = vec_add(v, vec_scale(A.basis[j], k[j]));
        gens.push_back(std::move(v));
    }
    return span_of(gens, n);
}

std::optional<Vec> coords_in(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    int n = static_cast<int>(v.size());
    Mat sys(n, static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < n; ++i) sys.at(i, static_cast<int>(j)) = basis[j][i];
    return solve(sys, v);
}

std::vector<Vec> extend_basis(const std::vector<Vec>& basis, int ambient) {
    std::vector<Vec> out = basis;
    Subspace s = span_of(basis, ambient);
    for (int j = 0; j < ambient && s.dim() < ambient; ++j) {
        Vec e(ambient, Scalar(0));
        e[j] = Scalar(1);
        if (!contains(s, e)) {
            out.push_back(e);
            std::vector<Vec> all = s.basis;
            all.push_back(e);
            s = span_of(all, ambient);
        }
    }
    return out;
}

}  // namespace pst
