#include "pst/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pst {

int qp_deg(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qp_trim(QPoly p) {
    p.resize(static_cast<size_t>(qp_deg(p) + 1));
    return p;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qp_trim(r);
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qp_trim(r);
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (qp_deg(a) < 0 || qp_deg(b) < 0) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return qp_trim(r);
}

QPoly qp_scale(const QPoly& a, const Rat& c) {
    QPoly r = a;
    for (auto& x : r) x *= c;
    return qp_trim(r);
}

QPoly qp_monic(const QPoly& a0) {
    QPoly a = qp_trim(a0);
    int d = qp_deg(a);
    if (d < 0) return a;
    return qp_scale(a, Rat(1) / a[d]);
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a0, const QPoly& b0) {
    QPoly a = qp_trim(a0), b = qp_trim(b0);
    int db = qp_deg(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    int da = qp_deg(a);
    if (da < db) return {{}, a};
    QPoly q(da - db + 1, Rat(0));
    while ((da = qp_deg(a)) >= db) {
        Rat c = a[da] / b[db];
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    }
    return {qp_trim(q), qp_trim(a)};
}

QPoly qp_gcd(const QPoly& a0, const QPoly& b0) {
    QPoly a = qp_trim(a0), b = qp_trim(b0);
    while (qp_deg(b) >= 0) {
        QPoly r = qp_divmod(a, b).second;
        a = b;
        b = r;
    }
    return qp_monic(a);
}

QPolyBezout qp_xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = qp_trim(a), r1 = qp_trim(b);
    QPoly s0 = {Rat(1)}, s1 = {};
    QPoly t0 = {}, t1 = {Rat(1)};
    while (qp_deg(r1) >= 0) {
        auto [q, r] = qp_divmod(r0, r1);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        QPoly t2 = qp_sub(t0, qp_mul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    int d = qp_deg(r0);
    Rat lc = d >= 0 ? r0[d] : Rat(1);
    return {qp_scale(r0, Rat(1) / lc), qp_scale(s0, Rat(1) / lc), qp_scale(t0, Rat(1) / lc)};
}

QPoly qp_derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<long>(i));
    return qp_trim(r);
}

Rat qp_eval(const QPoly& a, const Rat& x) {
    Rat r(0);
    for (int i = qp_deg(a); i >= 0; --i) r = r * x + a[i];
    return r;
}

std::string qp_str(const QPoly& a, const std::string& var) {
    int d = qp_deg(a);
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = d; i >= 0; --i) {
        if (a[i] == 0) continue;
        Rat c = a[i];
        c.canonicalize();
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rat ac = abs(c);
        if (i == 0 || ac != 1) os << ac.get_str();
        if (i >= 1) {
            if (ac != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Divisors of |n| by trial division. Desk-scale inputs only; divisors beyond
// the trial bound are not enumerated.
std::vector<mpz_class> small_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    std::vector<std::pair<mpz_class, int>> fac;
    mpz_class p = 2;
    mpz_class bound = 1000000;
    while (p * p <= n && p <= bound) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            fac.push_back({p, e});
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) fac.push_back({n, 1});
    divs.push_back(1);
    for (auto& [q, e] : fac) {
        size_t base = divs.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= q;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// Rational roots of a squarefree monic rational polynomial.
std::vector<Rat> roots_of_squarefree(const QPoly& p) {
    std::vector<Rat> roots;
    int d = qp_deg(p);
    if (d <= 0) return roots;
    if (d == 1) {
        roots.push_back(-p[0] / p[1]);
        return roots;
    }
    // clear denominators to an integer polynomial
    mpz_class lcm = 1;
    for (const auto& c : p) {
        Rat cc = c; cc.canonicalize();
        mpz_class den = cc.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> ip(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        Rat cc = p[i] * Rat(lcm);
        cc.canonicalize();
        ip[i] = cc.get_num();
    }
    if (ip[0] == 0) {
        roots.push_back(Rat(0));
        QPoly q(p.begin() + 1, p.end());
        auto rest = roots_of_squarefree(qp_trim(q));
        roots.insert(roots.end(), rest.begin(), rest.end());
        return roots;
    }
    auto nums = small_divisors(ip[0]);
    auto dens = small_divisors(ip[d]);
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            for (int s = 0; s < 2; ++s) {
                Rat cand(s ? -a : a, b);
                cand.canonicalize();
                if (qp_eval(p, cand) == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Rat& x, const Rat& y) { return x < y; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Factor a monic squarefree polynomial with no rational roots, degree >= 2.
// Returns {} if irreducible, factors otherwise; flag set to false if the
// engine cannot decide (degree > 4).
std::vector<QPoly> factor_rootfree(const QPoly& p, bool& decided) {
    decided = true;
    int d = qp_deg(p);
    if (d <= 3) return {};  // no rational root => irreducible for deg 2, 3
    if (d == 4) {
        // shift to depressed quartic y^4 + py^2 + qy + r, x = y - a/4
        Rat a = p[3], b = p[2], c = p[1], e = p[0];
        Rat sh = -a / 4;
        // p(x + sh) coefficients
        QPoly shifted = {e, c, b, a, Rat(1)};
        QPoly base = {sh, Rat(1)};
        QPoly acc = {Rat(1)};
        QPoly dep = {Rat(0)};
        for (int i = 0; i <= 4; ++i) {
            dep = qp_add(dep, qp_scale(acc, shifted[i]));
            acc = qp_mul(acc, base);
        }
        Rat P = dep.size() > 2 ? dep[2] : Rat(0);
        Rat Q = dep.size() > 1 ? dep[1] : Rat(0);
        Rat R = dep.size() > 0 ? dep[0] : Rat(0);
        auto reassemble = [&](const Rat& u, const Rat& v, const Rat& w) {
            // (y^2+uy+v)(y^2-uy+w) with y = x + a/4
            QPoly y = {a / 4, Rat(1)};
            QPoly y2 = qp_mul(y, y);
            QPoly f1 = qp_add(y2, qp_add(qp_scale(y, u), QPoly{v}));
            QPoly f2 = qp_add(y2, qp_add(qp_scale(y, -u), QPoly{w}));
            return std::vector<QPoly>{qp_monic(f1), qp_monic(f2)};
        };
        if (Q == 0) {
            // biquadratic: y^4 + Py^2 + R = (y^2+v)(y^2+w)
            auto disc = rat_sqrt(P * P - 4 * R);
            if (disc) {
                Rat v = (P + *disc) / 2, w = (P - *disc) / 2;
                return reassemble(Rat(0), v, w);
            }
            // fall through: a u != 0 split may still exist
        }
        // resolvent: z^3 + 2P z^2 + (P^2-4R) z - Q^2, z = u^2
        QPoly res = {-Q * Q, P * P - 4 * R, 2 * P, Rat(1)};
        QPoly res_sf = qp_divmod(res, qp_gcd(res, qp_derivative(res))).first;
        for (const Rat& z : roots_of_squarefree(qp_monic(res_sf))) {
            if (sgn(z) <= 0) continue;
            auto u = rat_sqrt(z);
            if (!u) continue;
            Rat w = (P + z + Q / *u) / 2;
            Rat v = (P + z - Q / *u) / 2;
            if (v * w != R) continue;
            return reassemble(*u, v, w);
        }
        return {};
    }
    decided = false;
    return {};
}

void factor_squarefree_monic(const QPoly& p, int mult, std::vector<QFactor>& out) {
    int d = qp_deg(p);
    if (d <= 0) return;
    QPoly rest = p;
    for (const Rat& r : roots_of_squarefree(p)) {
        out.push_back({QPoly{-r, Rat(1)}, mult, true});
        rest = qp_divmod(rest, QPoly{-r, Rat(1)}).first;
    }
    d = qp_deg(rest);
    if (d == 0) return;
    bool decided = true;
    auto parts = factor_rootfree(rest, decided);
    if (parts.empty()) {
        out.push_back({rest, mult, decided});
        return;
    }
    for (const auto& f : parts) factor_squarefree_monic(f, mult, out);
}

}  // namespace

std::vector<QFactor> qp_factor(const QPoly& p0) {
    QPoly p = qp_monic(p0);
    int d = qp_deg(p);
    if (d < 0) throw std::domain_error("factoring the zero polynomial");
    std::vector<QFactor> out;
    if (d == 0) return out;
    // squarefree decomposition (Yun)
    QPoly a = p, ad = qp_derivative(p);
    QPoly g = qp_gcd(a, ad);
    QPoly w = qp_divmod(a, g).first;
    int mult = 1;
    while (qp_deg(w) > 0) {
        QPoly y = qp_gcd(w, g);
        QPoly part = qp_divmod(w, y).first;
        if (qp_deg(part) > 0) factor_squarefree_monic(qp_monic(part), mult, out);
        w = y;
        g = qp_divmod(g, y).first;
        ++mult;
        if (mult > d + 1) throw std::logic_error("squarefree decomposition failed");
    }
    return out;
}

bool qp_irreducible(const QPoly& p0) {
    QPoly p = qp_monic(p0);
    int d = qp_deg(p);
    if (d < 1 || d > 4) throw std::domain_error("irreducibility test limited to degree 1..4");
    if (d == 1) return true;
    auto f = qp_factor(p);
    return f.size() == 1 && f[0].mult == 1 && f[0].irreducible;
}

std::vector<std::pair<Rat, int>> qp_rational_roots(const QPoly& p) {
    std::vector<std::pair<Rat, int>> out;
    QPoly sf = qp_divmod(p, qp_gcd(p, qp_derivative(p))).first;
    for (const Rat& r : roots_of_squarefree(qp_monic(sf))) {
        int m = 0;
        QPoly q = p;
        while (true) {
            auto [quot, rem] = qp_divmod(q, QPoly{-r, Rat(1)});
            if (qp_deg(rem) >= 0) break;
            q = quot;
            ++m;
        }
        out.push_back({r, m});
    }
    return out;
}

// ---------------------------------------------------------------------------

int sp_deg(const SPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

SPoly sp_trim(SPoly p) {
    p.resize(static_cast<size_t>(sp_deg(p) + 1));
    return p;
}

SPoly sp_mul(const SPoly& a, const SPoly& b) {
    if (sp_deg(a) < 0 || sp_deg(b) < 0) return {};
    SPoly r(a.size() + b.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return sp_trim(r);
}

SPoly sp_sub(const SPoly& a, const SPoly& b) {
    SPoly r(std::max(a.size(), b.size()), Scalar(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return sp_trim(r);
}

SPoly sp_monic(const SPoly& a0) {
    SPoly a = sp_trim(a0);
    int d = sp_deg(a);
    if (d < 0) return a;
    Scalar inv = a[d].inverse();
    for (auto& c : a) c *= inv;
    return a;
}

std::pair<SPoly, SPoly> sp_divmod(const SPoly& a0, const SPoly& b0) {
    SPoly a = sp_trim(a0), b = sp_trim(b0);
    int db = sp_deg(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    int da = sp_deg(a);
    if (da < db) return {{}, a};
    SPoly q(da - db + 1, Scalar(0));
    Scalar lead = b[db].inverse();
    while ((da = sp_deg(a)) >= db) {
        Scalar c = a[da] * lead;
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    }
    return {sp_trim(q), sp_trim(a)};
}

SPoly sp_gcd(const SPoly& a0, const SPoly& b0) {
    SPoly a = sp_trim(a0), b = sp_trim(b0);
    while (sp_deg(b) >= 0) {
        SPoly r = sp_divmod(a, b).second;
        a = b;
        b = r;
    }
    return sp_monic(a);
}

SPoly sp_derivative(const SPoly& a) {
    if (a.size() <= 1) return {};
    SPoly r(a.size() - 1, Scalar(0));
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Scalar(static_cast<long>(i));
    return sp_trim(r);
}

Scalar sp_eval(const SPoly& a, const Scalar& x) {
    Scalar r(0);
    for (int i = sp_deg(a); i >= 0; --i) r = r * x + a[i];
    return r;
}

std::string sp_str(const SPoly& a, const std::string& var) {
    int d = sp_deg(a);
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = d; i >= 0; --i) {
        if (a[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << a[i].str() << ")";
        if (i >= 1) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::optional<Scalar> scalar_sqrt(const Scalar& c) { return scalar_sqrt(c, c.field()); }

namespace {

// square roots in a quadratic extension F = Q[t]/(t^2 + p t + q)
std::optional<Scalar> quad_field_sqrt(const FieldPtr& F, const Rat& c0, const Rat& c1) {
    Rat p = F->minpoly()[1], q = F->minpoly()[0];
    // (a + b t)^2 = c0 + c1 t:  a^2 - q b^2 = c0 ; 2ab - p b^2 = c1
    // t = b^2 solves (p^2-4q) t^2 + (2 p c1 - 4 c0) t + c1^2 = 0
    Rat A = p * p - 4 * q, B = 2 * p * c1 - 4 * c0, C = c1 * c1;
    std::vector<Rat> ts;
    if (A == 0) {
        if (B != 0) ts.push_back(-C / B);
    } else {
        auto disc = rat_sqrt(B * B - 4 * A * C);
        if (disc) {
            ts.push_back((-B + *disc) / (2 * A));
            ts.push_back((-B - *disc) / (2 * A));
        }
    }
    Scalar target = Scalar(Rat(c0)) + Scalar(Rat(c1)) * Scalar::generator(F);
    for (const Rat& t : ts) {
        if (sgn(t) < 0) continue;
        auto b = rat_sqrt(t);
        if (!b || *b == 0) continue;
        Rat a = (c1 + p * t) / (2 * *b);
        Scalar cand = Scalar(Rat(a)) + Scalar(Rat(*b)) * Scalar::generator(F);
        if (cand * cand == target) return cand;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Scalar> scalar_sqrt(const Scalar& c, const FieldPtr& F0) {
    if (c.is_rational()) {
        auto r = rat_sqrt(c.rat());
        if (r) return Scalar(*r);
        if (!F0 || F0->degree() != 2) return std::nullopt;
        return quad_field_sqrt(F0, c.rat(), Rat(0));
    }
    const FieldPtr& F = c.field();
    if (F0 && F0 != F) throw std::logic_error("scalar from a different field");
    if (F->degree() != 2) {
        return std::nullopt;  // only rational squares recognized in deg > 2 fields
    }
    return quad_field_sqrt(F, c.coeffs()[0], c.coeffs()[1]);
}

FieldRoots sp_field_roots(const SPoly& p0, const FieldPtr& field) {
    FieldRoots out;
    SPoly p = sp_monic(p0);
    auto divide_out = [&](const Scalar& r) {
        int m = 0;
        while (true) {
            SPoly lin = {r.neg(), Scalar(1)};
            auto [q, rem] = sp_divmod(p, lin);
            if (sp_deg(rem) >= 0) break;
            p = q;
            ++m;
        }
        if (m > 0) out.roots.push_back({r, m});
        return m > 0;
    };
    bool progress = true;
    while (progress && sp_deg(p) > 0) {
        progress = false;
        if (sp_deg(p) == 1) {
            divide_out(p[0].neg() * p[1].inverse());
            break;
        }
        // rational roots when every coefficient is rational
        bool all_rat = true;
        for (const auto& c : p)
            if (!c.is_rational()) { all_rat = false; break; }
        if (all_rat) {
            QPoly q(p.size());
            for (size_t i = 0; i < p.size(); ++i) q[i] = p[i].rat();
            for (auto& [r, m] : qp_rational_roots(q)) {
                (void)m;
                if (divide_out(Scalar(r))) progress = true;
            }
            if (progress) continue;
        }
        if (sp_deg(p) == 2) {
            // x^2 + bx + c, roots (-b ± sqrt(b^2-4c))/2
            Scalar b = p[1], c = p[0];
            auto disc = scalar_sqrt(b * b - Scalar(4) * c, field);
            if (disc) {
                Scalar half = Scalar(Rat(1, 2));
                divide_out((b.neg() + *disc) * half);
                divide_out((b.neg() - *disc) * half);
                progress = true;
                continue;
            }
        }
        // roots in the field of the form a + b*t for quadratic extensions are
        // covered by the quadratic branch after rational roots; give up here
        break;
    }
    out.remainder = p;
    return out;
}

}  // namespace pst
