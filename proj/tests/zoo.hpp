#pragma once

// Shared test algebras and modules.

#include "pst/algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zoo {

using namespace pst;

struct Builder {
    int dim;
    std::vector<std::string> labels;
    std::vector<Scalar> sc;
    Builder(int d, std::vector<std::string> l) : dim(d), labels(std::move(l)), sc(static_cast<size_t>(d) * d * d, Scalar(0)) {}
    void set(int i, int j, int k, Scalar v) { sc[(static_cast<size_t>(i) * dim + j) * dim + k] = v; }
    AlgebraPtr build(Vec unit, std::optional<Vec> omega = std::nullopt, FieldPtr field = nullptr) {
        return Algebra::create(dim, labels, sc, std::move(unit), std::move(omega), std::move(field));
    }
};

// Q[x]/(x^n); optional omega = r*1 + x.
inline AlgebraPtr truncated_poly(int n, std::optional<Rat> omega_r = std::nullopt) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
    Builder b(n, labels);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) b.set(i, j, i + j, Scalar(1));
    Vec unit(n, Scalar(0));
    unit[0] = Scalar(1);
    std::optional<Vec> om;
    if (omega_r) {
        Vec w(n, Scalar(0));
        w[0] = Scalar(*omega_r);
        if (n > 1) w[1] = Scalar(1);
        om = w;
    }
    return b.build(unit, om);
}

// the paper-introduction 2-dim algebra {[[a,b],[0,a]]} is Q[x]/(x^2)
inline AlgebraPtr intro_algebra() { return truncated_poly(2); }

// M_n(Q) with basis E_ij at index i*n+j
inline AlgebraPtr matrix_algebra(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    Builder b(n * n, labels);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) b.set(i * n + j, k * n + l, i * n + l, Scalar(1));
    Vec unit(n * n, Scalar(0));
    for (int i = 0; i < n; ++i) unit[i * n + i] = Scalar(1);
    return b.build(unit);
}

// upper triangular 2x2: basis E11, E12, E22
inline AlgebraPtr upper_triangular2() {
    Builder b(3, {"E11", "E12", "E22"});
    b.set(0, 0, 0, Scalar(1));   // E11 E11
    b.set(0, 1, 1, Scalar(1));   // E11 E12
    b.set(1, 2, 1, Scalar(1));   // E12 E22
    b.set(2, 2, 2, Scalar(1));   // E22 E22
    Vec unit = {Scalar(1), Scalar(0), Scalar(1)};
    return b.build(unit);
}

// direct sum with blockwise product
inline AlgebraPtr direct_sum(const AlgebraPtr& A, const AlgebraPtr& B) {
    int n = A->dim + B->dim;
    std::vector<std::string> labels;
    for (auto& l : A->labels) labels.push_back("a." + l);
    for (auto& l : B->labels) labels.push_back("b." + l);
    Builder b(n, labels);
    for (int i = 0; i < A->dim; ++i)
        for (int j = 0; j < A->dim; ++j)
            for (int k = 0; k < A->dim; ++k)
                if (!A->c(i, j, k).is_zero()) b.set(i, j, k, A->c(i, j, k));
    for (int i = 0; i < B->dim; ++i)
        for (int j = 0; j < B->dim; ++j)
            for (int k = 0; k < B->dim; ++k)
                if (!B->c(i, j, k).is_zero()) b.set(A->dim + i, A->dim + j, A->dim + k, B->c(i, j, k));
    Vec unit(n, Scalar(0));
    for (int i = 0; i < A->dim; ++i) unit[i] = A->unit[i];
    for (int i = 0; i < B->dim; ++i) unit[A->dim + i] = B->unit[i];
    std::optional<Vec> om;
    if (A->omega && B->omega) {
        Vec w(n, Scalar(0));
        for (int i = 0; i < A->dim; ++i) w[i] = (*A->omega)[i];
        for (int i = 0; i < B->dim; ++i) w[A->dim + i] = (*B->omega)[i];
        om = w;
    }
    return b.build(unit, om);
}

// symmetric Nakayama algebra: cyclic quiver on k vertices, paths of length
// < ell, with ell = m*k + 1. Basis p(v,l) at index v*ell + l.
inline AlgebraPtr nakayama_cyclic(int k, int ell) {
    int n = k * ell;
    std::vector<std::string> labels;
    for (int v = 0; v < k; ++v)
        for (int l = 0; l < ell; ++l)
            labels.push_back("p" + std::to_string(v) + "_" + std::to_string(l));
    Builder b(n, labels);
    for (int v = 0; v < k; ++v)
        for (int l = 0; l < ell; ++l)
            for (int m = 0; m < ell; ++m) {
                if (l + m >= ell) continue;
                int w = (v + l) % k;  // endpoint of p(v,l)
                // p(v,l) * p(w,m) = p(v,l+m)
                b.set(v * ell + l, w * ell + m, v * ell + (l + m), Scalar(1));
            }
    Vec unit(n, Scalar(0));
    for (int v = 0; v < k; ++v) unit[v * ell + 0] = Scalar(1);
    return b.build(unit);
}

// Q[x,y]/(x^2, y^2), commutative, basis {1, x, y, xy}
inline AlgebraPtr commutative_xy() {
    Builder b(4, {"1", "x", "y", "xy"});
    auto one = [&](int i, int j, int k) { b.set(i, j, k, Scalar(1)); };
    for (int i = 0; i < 4; ++i) { one(0, i, i); if (i) one(i, 0, i); }
    one(1, 2, 3);
    one(2, 1, 3);
    Vec unit = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
    return b.build(unit);
}

// End_P(T) for T = Q^m + Q^m over the introduction algebra:
// pairs (A,B) with product (A,B)(A',B') = (AA', AB' + BA').
inline AlgebraPtr intro_endomorphism_algebra(int m) {
    int nm = m * m;
    int n = 2 * nm;
    std::vector<std::string> labels;
    for (int part = 0; part < 2; ++part)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                labels.push_back((part == 0 ? "A" : "B") + std::to_string(i) + std::to_string(j));
    Builder b(n, labels);
    auto ia = [&](int i, int j) { return i * m + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    if (j != k) continue;
                    // E_ij E_kl = E_il in each bilinear slot
                    b.set(ia(i, j), ia(k, l), ia(i, l), Scalar(1));              // A*A' -> A
                    b.set(ia(i, j), nm + ia(k, l), nm + ia(i, l), Scalar(1));    // A*B' -> B
                    b.set(nm + ia(i, j), ia(k, l), nm + ia(i, l), Scalar(1));    // B*A' -> B
                }
    Vec unit(n, Scalar(0));
    for (int i = 0; i < m; ++i) unit[ia(i, i)] = Scalar(1);
    return b.build(unit);
}

// 2-dim field algebra Q[t]/(m) viewed as a Q-algebra (non-split semisimple)
inline AlgebraPtr field_extension_algebra(const Rat& c0, const Rat& c1) {
    // t^2 = -c1 t - c0
    Builder b(2, {"1", "t"});
    b.set(0, 0, 0, Scalar(1));
    b.set(0, 1, 1, Scalar(1));
    b.set(1, 0, 1, Scalar(1));
    b.set(1, 1, 0, Scalar(-c0));
    b.set(1, 1, 1, Scalar(-c1));
    return b.build({Scalar(1), Scalar(0)});
}

struct Lcg {
    uint64_t s;
    explicit Lcg(uint64_t seed) : s(seed ? seed : 1) {}
    uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    long small(int lo, int hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

}  // namespace zoo
