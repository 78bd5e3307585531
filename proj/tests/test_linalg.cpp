#include "doctest.h"

#include "pst/linalg.hpp"
#include "pst/poly.hpp"

#include <cstdint>

using namespace pst;

namespace {

// deterministic small-integer generator for property runs
struct Lcg {
    uint64_t s;
    explicit Lcg(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    long small(int lo, int hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Mat random_mat(Lcg& g, int n) {
    Mat m(n, n);
    for (auto& x : m.a) x = Scalar(g.small(-3, 3));
    return m;
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
    Rat a = rat_parse("2/4");
    CHECK(rat_str(a) == "1/2");
    Scalar x(Rat(1, 3)), y(Rat(2, 5));
    CHECK((x + y).str() == "11/15");
    CHECK((x * y).str() == "2/15");
    CHECK((x / y).str() == "5/6");
    CHECK_THROWS(rat_parse("1/0"));
}

TEST_CASE("number field arithmetic in Q[t]/(t^2-2)") {
    auto F = std::make_shared<NumberField>(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
    Scalar t = Scalar::generator(F);
    CHECK((t * t).str() == "2");
    Scalar u = t + Scalar(1);
    Scalar inv = u.inverse();
    CHECK((u * inv).is_one());
    // (1+t)(t-1) = t^2-1 = 1
    CHECK(((Scalar(1) + t) * (t - Scalar(1))).is_one());
    CHECK_THROWS(std::make_shared<NumberField>(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}));  // t^2-1 reducible
}

TEST_CASE("solve: identity, exact division, inconsistency") {
    Mat I = Mat::identity(3);
    Vec b = {Scalar(1), Scalar(2), Scalar(3)};
    auto x = solve(I, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Mat m(1, 1);
    m.at(0, 0) = Scalar(2);
    auto y = solve(m, {Scalar(1)});
    REQUIRE(y.has_value());
    CHECK((*y)[0].str() == "1/2");

    Mat s(2, 2);
    s.at(0, 0) = Scalar(1); s.at(0, 1) = Scalar(1);
    s.at(1, 0) = Scalar(2); s.at(1, 1) = Scalar(2);
    CHECK_FALSE(solve(s, {Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("nullspace canonical bases") {
    Mat z(2, 2);
    auto nz = nullspace(z);
    REQUIRE(nz.size() == 2);
    CHECK(nz[0] == Vec{Scalar(1), Scalar(0)});
    CHECK(nz[1] == Vec{Scalar(0), Scalar(1)});

    CHECK(nullspace(Mat::identity(4)).empty());

    Mat r(1, 2);
    r.at(0, 0) = Scalar(1); r.at(0, 1) = Scalar(1);
    auto nr = nullspace(r);
    REQUIRE(nr.size() == 1);
    CHECK(nr[0] == Vec{Scalar(1), Scalar(-1)});
}

TEST_CASE("char_poly basics") {
    auto p = char_poly(Mat::identity(2));  // (x-1)^2 = 1 - 2x + x^2
    CHECK(p == SPoly{Scalar(1), Scalar(-2), Scalar(1)});

    Mat n(2, 2);
    n.at(0, 1) = Scalar(1);
    CHECK(char_poly(n) == SPoly{Scalar(0), Scalar(0), Scalar(1)});

    // companion matrix of x^2-2: [[0,2],[1,0]] acting so char poly = x^2 - 2
    Mat c(2, 2);
    c.at(0, 1) = Scalar(2);
    c.at(1, 0) = Scalar(1);
    CHECK(char_poly(c) == SPoly{Scalar(-2), Scalar(0), Scalar(1)});
}

TEST_CASE("property: solve recovers a consistent system") {
    Lcg g(12345);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(g.next() % 4);
        Mat M = random_mat(g, n);
        Vec x(n);
        for (auto& v : x) v = Scalar(g.small(-3, 3));
        Vec b = vec_mat(x, transpose(M));  // M x as column convention
        auto sol = solve(M, b);
        REQUIRE(sol.has_value());
        CHECK(vec_mat(*sol, transpose(M)) == b);
    }
}

TEST_CASE("property: nullspace vectors annihilate, count = cols - rank") {
    Lcg g(999);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(g.next() % 4);
        Mat M = random_mat(g, n);
        // make it singular sometimes by zeroing a row
        if (iter % 2 == 0)
            for (int j = 0; j < n; ++j) M.at(0, j) = Scalar(0);
        auto ker = nullspace(M);
        CHECK(static_cast<int>(ker.size()) == M.cols - rank(M));
        for (const auto& v : ker) CHECK(vec_is_zero(vec_mat(v, transpose(M))));
    }
}

TEST_CASE("property: Cayley-Hamilton up to 6x6") {
    Lcg g(777);
    for (int n = 2; n <= 6; ++n) {
        Mat M = random_mat(g, n);
        CHECK(eval_poly_at(char_poly(M), M).is_zero());
    }
}

TEST_CASE("min_poly divides char_poly and annihilates") {
    Lcg g(31);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 2 + static_cast<int>(g.next() % 3);
        Mat M = random_mat(g, n);
        SPoly mp = min_poly(M);
        CHECK(eval_poly_at(mp, M).is_zero());
        auto [q, r] = sp_divmod(char_poly(M), mp);
        CHECK(sp_deg(r) < 0);
    }
}

TEST_CASE("factoring engine") {
    // (x-1)(x+2)
    auto f = qp_factor(QPoly{Rat(-2), Rat(1), Rat(1)});
    CHECK(f.size() == 2);
    // x^2 - 2 irreducible
    CHECK(qp_irreducible(QPoly{Rat(-2), Rat(0), Rat(1)}));
    // x^4 + 1 irreducible over Q
    CHECK(qp_irreducible(QPoly{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}));
    // x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
    auto g = qp_factor(QPoly{Rat(4), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(g.size() == 2);
    for (auto& fac : g) CHECK(qp_deg(fac.poly) == 2);
    // (x-1)^2 (x+3)
    auto h = qp_factor(qp_mul(qp_mul(QPoly{Rat(-1), Rat(1)}, QPoly{Rat(-1), Rat(1)}), QPoly{Rat(3), Rat(1)}));
    int total = 0;
    for (auto& fac : h) total += fac.mult * qp_deg(fac.poly);
    CHECK(total == 3);
}

TEST_CASE("field roots with quadratic extension") {
    auto F = std::make_shared<NumberField>(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
    // x^2 - 2 splits over Q[sqrt2]
    SPoly p = {Scalar(-2), Scalar(0), Scalar(1)};
    auto roots = sp_field_roots(p, F);
    CHECK(roots.roots.size() == 2);
    CHECK(sp_deg(roots.remainder) == 0);
    // sqrt of 3 + 2 sqrt2 = 1 + sqrt2
    Scalar t = Scalar::generator(F);
    auto s = scalar_sqrt(Scalar(3) + Scalar(2) * t);
    REQUIRE(s.has_value());
    CHECK((*s) * (*s) == Scalar(3) + Scalar(2) * t);
}

TEST_CASE("subspace operations") {
    Vec e1 = {Scalar(1), Scalar(0), Scalar(0)};
    Vec e2 = {Scalar(0), Scalar(1), Scalar(0)};
    Vec v = {Scalar(1), Scalar(1), Scalar(0)};
    auto S = span_of({e1, v}, 3);
    CHECK(S.dim() == 2);
    CHECK(contains(S, e2));
    auto T = span_of({e2}, 3);
    CHECK(subspace_eq(subspace_intersect(S, T), T));
    CHECK(subspace_sum(S, T).dim() == 2);
}
