#include "doctest.h"

#include "pst/pseudotrace.hpp"
#include "zoo.hpp"

using namespace pst;

namespace {

SymmetricFunctional top_functional(const AlgebraPtr& A) {
    Vec v(A->dim, Scalar(0));
    v[A->dim - 1] = Scalar(1);
    return SymmetricFunctional::create(A, v);
}

SymmetricFunctional matrix_trace(const AlgebraPtr& M, int n) {
    Vec v(M->dim, Scalar(0));
    for (int i = 0; i < n; ++i) v[i * n + i] = Scalar(1);
    return SymmetricFunctional::create(M, v);
}

// T = Q^m + Q^m over Q[x]/(x^2); x sends (u, v) to (0, u)
RightModule intro_T(const AlgebraPtr& P, int m) {
    Mat X(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) X.at(i, m + i) = Scalar(1);
    std::vector<Mat> act = {Mat::identity(2 * m), X};
    return RightModule::create(P, 2 * m, std::move(act));
}

Mat intro_endo(int m, const Mat& A, const Mat& B) {
    Mat E(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            E.at(i, j) = A.at(i, j);
            E.at(m + i, m + j) = A.at(i, j);
            E.at(i, m + j) = B.at(i, j);
        }
    return E;
}

}  // namespace

TEST_CASE("module endomorphisms of the intro module") {
    auto P = zoo::intro_algebra();
    for (int m = 1; m <= 3; ++m) {
        auto T = intro_T(P, m);
        auto endos = module_endomorphisms(T);
        CHECK(static_cast<int>(endos.size()) == 2 * m * m);
        for (const auto& E : endos) CHECK(is_endomorphism(T, E));
    }
}

TEST_CASE("regular modules are interlocked; T_p is one-dimensional for serial algebras") {
    for (int n = 2; n <= 6; ++n) {
        auto A = zoo::truncated_poly(n);
        auto D = make_trace_decomposition(regular_module(A), top_functional(A));
        REQUIRE(D.blocks.size() == 1);
        CHECK_FALSE(D.blocks[0].semisimple);
        CHECK(D.t_dim(0, 0) == 1);
    }
    auto N = zoo::nakayama_cyclic(3, 4);
    Vec vals(N->dim, Scalar(0));
    for (int v = 0; v < 3; ++v) vals[v * 4 + 3] = Scalar(1);
    auto D = make_trace_decomposition(regular_module(N), SymmetricFunctional::create(N, vals));
    REQUIRE(D.blocks.size() == 1);
    for (int p = 0; p < 3; ++p) CHECK(D.t_dim(0, p) == 1);
}

TEST_CASE("a non-interlocked module is rejected with a certificate") {
    auto P = zoo::intro_algebra();
    // W = P / soc(P): one-dimensional, x acts by zero
    std::vector<Mat> act = {Mat::identity(1), Mat(1, 1)};
    auto W = RightModule::create(P, 1, std::move(act));
    auto phi = SymmetricFunctional::create(P, {Scalar(0), Scalar(1)});
    try {
        make_trace_decomposition(W, phi);
        FAIL("expected NotInterlockedError");
    } catch (const NotInterlockedError& e) {
        CHECK(e.idem_index == 0);
        CHECK_FALSE(e.witness.empty());
    }
}

TEST_CASE("pseudo-trace on the intro module is the off-diagonal block trace") {
    auto P = zoo::intro_algebra();
    auto phi = SymmetricFunctional::create(P, {Scalar(0), Scalar(1)});
    zoo::Lcg g(2024);
    for (int m = 1; m <= 3; ++m) {
        auto T = intro_T(P, m);
        auto D = make_trace_decomposition(T, phi);
        for (int iter = 0; iter < 20; ++iter) {
            Mat A(m, m), B(m, m);
            for (auto& x : A.a) x = Scalar(g.small(-3, 3));
            for (auto& x : B.a) x = Scalar(g.small(-3, 3));
            Mat E = intro_endo(m, A, B);
            CHECK(D.pseudo_trace(E) == trace(B));
        }
        // identity has vanishing socle component; zero maps to zero
        CHECK(D.pseudo_trace(Mat::identity(2 * m)) == Scalar(0));
        CHECK(D.pseudo_trace(Mat(2 * m, 2 * m)) == Scalar(0));
    }
}

TEST_CASE("pseudo-trace over the base field is the ordinary trace") {
    auto Q = zoo::truncated_poly(1);
    auto one = SymmetricFunctional::create(Q, {Scalar(1)});
    std::vector<Mat> act = {Mat::identity(3)};
    auto W = RightModule::create(Q, 3, std::move(act));
    auto D = make_trace_decomposition(W, one);
    zoo::Lcg g(7);
    for (int iter = 0; iter < 5; ++iter) {
        Mat M(3, 3);
        for (auto& x : M.a) x = Scalar(g.small(-4, 4));
        CHECK(D.pseudo_trace(M) == trace(M));
    }
}

TEST_CASE("non-endomorphisms are rejected") {
    auto P = zoo::intro_algebra();
    auto phi = SymmetricFunctional::create(P, {Scalar(0), Scalar(1)});
    auto D = make_trace_decomposition(intro_T(P, 2), phi);
    Mat bad(4, 4);
    bad.at(3, 0) = Scalar(1);  // does not commute with the nilpotent action
    CHECK_THROWS_AS(D.pseudo_trace(bad), NotEndomorphismError);
}

TEST_CASE("symmetry of the pseudo-trace on sampled endomorphism pairs") {
    auto P = zoo::intro_algebra();
    auto phi = SymmetricFunctional::create(P, {Scalar(0), Scalar(1)});
    auto rep = verify_symmetry(make_trace_decomposition(intro_T(P, 2), phi), 25, 99);
    CHECK(rep.tested == 25);
    CHECK(rep.failed == 0);

    auto A4 = zoo::truncated_poly(4);
    auto D4 = make_trace_decomposition(regular_module(A4), top_functional(A4));
    auto rep4 = verify_symmetry(D4, 20, 5);
    CHECK(rep4.failed == 0);
}

TEST_CASE("shift identity") {
    // omega = r * 1: both sides vanish
    {
        auto A0 = zoo::truncated_poly(3);
        auto Aw = Algebra::create(A0->dim, A0->labels, A0->sc, A0->unit,
                                  vec_scale(A0->unit, Scalar(4)), nullptr);
        auto D = make_trace_decomposition(regular_module(Aw), top_functional(Aw));
        auto s = shift_identity(D, Scalar(4), Mat::identity(3));
        CHECK(s.lhs == Scalar(0));
        CHECK(s.rhs == Scalar(0));
        CHECK(s.quotient_zero);
    }
    // dual numbers, omega = r + x, g = id: both sides equal 1
    {
        auto A = zoo::truncated_poly(2, Rat(3));
        auto phi = SymmetricFunctional::create(A, {Scalar(0), Scalar(1)});
        auto D = make_trace_decomposition(regular_module(A), phi);
        auto s = shift_identity(D, Scalar(Rat(3)), Mat::identity(2));
        CHECK(s.lhs == Scalar(1));
        CHECK(s.rhs == Scalar(1));
    }
    // Q[x]/(x^3) regular, random g
    {
        auto A = zoo::truncated_poly(3, Rat(-2));
        auto D = make_trace_decomposition(regular_module(A), top_functional(A));
        auto endos = module_endomorphisms(D.W);
        zoo::Lcg g(11);
        for (int iter = 0; iter < 10; ++iter) {
            Mat G(3, 3);
            for (const auto& E : endos) {
                long c = g.small(-3, 3);
                if (c) G = G + scale(E, Scalar(c));
            }
            auto s = shift_identity(D, Scalar(Rat(-2)), G);
            CHECK(s.lhs == s.rhs);
        }
    }
}

TEST_CASE("canonical module reproduces the functional on the socle") {
    // matrix algebra with trace; local serial algebra; non-basic direct sum
    {
        auto M2 = zoo::matrix_algebra(2);
        auto cm = canonical_module_term(M2, matrix_trace(M2, 2));
        auto soc = socle(*M2);
        for (const auto& a : soc.basis)
            CHECK(cm.trace_of_source(a) == matrix_trace(M2, 2).eval(a));
    }
    {
        auto A = zoo::truncated_poly(3);
        auto phi = top_functional(A);
        auto cm = canonical_module_term(A, phi);
        for (const auto& a : socle(*A).basis)
            CHECK(cm.trace_of_source(a) == phi.eval(a));
    }
    {
        auto S = zoo::direct_sum(zoo::matrix_algebra(2), zoo::truncated_poly(1));
        Vec v(S->dim, Scalar(0));
        v[0] = Scalar(1); v[3] = Scalar(1);  // trace on the matrix block
        v[4] = Scalar(2);                    // weight 2 on the field block
        auto phi = SymmetricFunctional::create(S, v);
        auto cm = canonical_module_term(S, phi);
        for (const auto& a : socle(*S).basis)
            CHECK(cm.trace_of_source(a) == phi.eval(a));
    }
}

TEST_CASE("decomposition of symmetric functions into trace terms") {
    // phi = 0: empty
    auto P = zoo::intro_algebra();
    CHECK(decompose_symmetric_function(P, SymmetricFunctional::create(P, {Scalar(0), Scalar(0)})).empty());

    // matrix trace: one ordinary term
    auto M2 = zoo::matrix_algebra(2);
    auto terms = decompose_symmetric_function(M2, matrix_trace(M2, 2));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].ordinary);
    CHECK(terms[0].module.dim == 2);

    // local top functional: one layered term on the regular module
    auto A3 = zoo::truncated_poly(3);
    auto t3 = decompose_symmetric_function(A3, top_functional(A3));
    REQUIRE(t3.size() == 1);
    CHECK_FALSE(t3[0].ordinary);
    CHECK(t3[0].module.dim == 3);

    // two recursion rounds
    auto A4 = zoo::truncated_poly(4);
    auto phi4 = SymmetricFunctional::create(A4, {Scalar(0), Scalar(1), Scalar(0), Scalar(1)});
    auto t4 = decompose_symmetric_function(A4, phi4);
    CHECK(t4.size() == 2);

    // mixture across blocks
    auto S = zoo::direct_sum(zoo::truncated_poly(2), zoo::matrix_algebra(2));
    Vec v(S->dim, Scalar(0));
    v[1] = Scalar(1);               // socle of the dual-number block
    v[2] = Scalar(1); v[5] = Scalar(1);  // trace on the matrix block
    auto st = decompose_symmetric_function(S, SymmetricFunctional::create(S, v));
    CHECK(st.size() == 2);
}

TEST_CASE("decomposition handles functionals with nonzero radical") {
    auto U = zoo::upper_triangular2();
    // phi(E11) = phi(E22) = 1, phi(E12) = 0: symmetric, radical = span{E12}
    auto phi = SymmetricFunctional::create(U, {Scalar(1), Scalar(0), Scalar(1)});
    auto terms = decompose_symmetric_function(U, phi);
    CHECK(terms.size() == 2);  // two ordinary class traces after the quotient
}
