#include "pst/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace pst {

NonSplitError::NonSplitError(Kind k, SPoly w, const std::string& context)
    : PstError("non-split over the base field (" + context + "), witness: " + sp_str(w)),
      kind(k), witness(std::move(w)) {}

NotInterlockedError::NotInterlockedError(int i, Vec w)
    : PstError("module is not interlocked: kernel condition fails at idempotent " + std::to_string(i)),
      idem_index(i), witness(std::move(w)) {}

Vec Algebra::basis_vec(int i) const {
    Vec v(dim, Scalar(0));
    v[i] = Scalar(1);
    return v;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    Vec r(dim, Scalar(0));
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar ab = a[i] * b[j];
            for (int k = 0; k < dim; ++k) {
                const Scalar& s = c(i, j, k);
                if (!s.is_zero()) r[k] += ab * s;
            }
        }
    }
    return r;
}

Mat Algebra::right_mul(const Vec& a) const {
    Mat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec row = mul(basis_vec(j), a);
        for (int k = 0; k < dim; ++k) m.at(j, k) = row[k];
    }
    return m;
}

Mat Algebra::left_mul(const Vec& a) const {
    Mat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec row = mul(a, basis_vec(j));
        for (int k = 0; k < dim; ++k) m.at(j, k) = row[k];
    }
    return m;
}

Vec Algebra::pow(const Vec& a, int k) const {
    Vec r = unit;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

AlgebraPtr Algebra::create(int dim, std::vector<std::string> labels, std::vector<Scalar> sc,
                           Vec unit, std::optional<Vec> omega, FieldPtr field, bool validate) {
    if (dim <= 0) throw InputError("algebra dimension must be positive (a unit is required)");
    if (static_cast<int>(labels.size()) != dim) throw InputError("label count != dim");
    if (sc.size() != static_cast<size_t>(dim) * dim * dim) throw InputError("structure constant table size mismatch");
    if (static_cast<int>(unit.size()) != dim) throw InputError("unit vector length mismatch");
    if (omega && static_cast<int>(omega->size()) != dim) throw InputError("omega vector length mismatch");

    auto A = std::make_shared<Algebra>();
    A->dim = dim;
    A->labels = std::move(labels);
    A->sc = std::move(sc);
    A->unit = std::move(unit);
    A->omega = std::move(omega);
    A->field = std::move(field);

    if (validate) {
        // unit law
        Mat ru = A->right_mul(A->unit), lu = A->left_mul(A->unit);
        if (!(ru == Mat::identity(dim)) || !(lu == Mat::identity(dim)))
            throw InputError("unit law fails");
        // associativity: right regular representation must be a homomorphism
        std::vector<Mat> R(dim);
        for (int i = 0; i < dim; ++i) R[i] = A->right_mul(A->basis_vec(i));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Mat lhs = A->right_mul(A->mul(A->basis_vec(i), A->basis_vec(j)));
                if (!(lhs == R[i] * R[j]))
                    throw InputError("associativity fails on basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        if (A->omega) {
            if (!(A->right_mul(*A->omega) == A->left_mul(*A->omega)))
                throw InputError("declared omega is not central");
        }
    }
    return A;
}

SPoly element_min_poly(const Algebra& A, const Vec& a) {
    std::vector<Vec> rows;
    Vec p = A.unit;
    for (int k = 0; k <= A.dim; ++k) {
        rows.push_back(p);
        Mat sys = transpose(Mat::from_rows(rows, A.dim));
        auto ker = nullspace(sys);
        if (!ker.empty()) {
            SPoly mp(ker[0].begin(), ker[0].end());
            return sp_monic(mp);
        }
        p = A.mul(p, a);
    }
    throw std::logic_error("element minimal polynomial not found");
}

Subspace jacobson_radical(const Algebra& A) {
    int n = A.dim;
    // T[i][j] = tr(L_{b_i b_j}); x in J  <=>  x.T = 0
    Mat T(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            T.at(i, j) = trace(A.left_mul(A.mul(A.basis_vec(i), A.basis_vec(j))));
    auto ker = nullspace(transpose(T));
    return span_of(ker, n);
}

Subspace socle(const Algebra& A, bool check_right) {
    Subspace J = jacobson_radical(A);
    if (J.dim() == 0) return span_rows(Mat::identity(A.dim));
    // {a : r a = 0 for all r in J}: stack left-multiplication constraints
    std::vector<Vec> rows;  // of the system acting on a as column: use transpose trick
    // a * L(r) = coords of r*a ; so constraints: L(r)^T a^T = 0 stacked
    Mat sys(J.dim() * A.dim, A.dim);
    for (int t = 0; t < J.dim(); ++t) {
        Mat L = A.left_mul(J.basis[t]);
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j)
                sys.at(t * A.dim + j, i) = L.at(i, j);
    }
    auto left = span_of(nullspace(sys), A.dim);
    if (check_right) {
        Mat sysr(J.dim() * A.dim, A.dim);
        for (int t = 0; t < J.dim(); ++t) {
            Mat R = A.right_mul(J.basis[t]);
            for (int i = 0; i < A.dim; ++i)
                for (int j = 0; j < A.dim; ++j)
                    sysr.at(t * A.dim + j, i) = R.at(i, j);
        }
        auto right = span_of(nullspace(sysr), A.dim);
        if (!subspace_eq(left, right))
            throw PstError("left and right socles differ (algebra is not symmetric)");
    }
    return left;
}

Subspace center_subspace(const Algebra& A) {
    int n = A.dim;
    Mat sys(n * n, n);
    for (int t = 0; t < n; ++t) {
        Mat D = A.left_mul(A.basis_vec(t)) - A.right_mul(A.basis_vec(t));
        // z*D = 0
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sys.at(t * n + j, i) = D.at(i, j);
    }
    return span_of(nullspace(sys), n);
}

std::vector<Subspace> radical_powers(const Algebra& A) {
    std::vector<Subspace> out;
    Subspace J = jacobson_radical(A);
    out.push_back(J);
    while (out.back().dim() > 0) {
        std::vector<Vec> prods;
        for (const auto& x : out.back().basis)
            for (const auto& y : J.basis) prods.push_back(A.mul(x, y));
        Subspace next = span_of(prods, A.dim);
        if (next.dim() == out.back().dim())
            throw std::logic_error("radical is not nilpotent");
        out.push_back(next);
        if (static_cast<int>(out.size()) > A.dim + 1)
            throw std::logic_error("radical power chain too long");
    }
    return out;
}

int loewy_length(const Algebra& A) {
    // least n with J^n = 0; semisimple algebras have length 1
    return static_cast<int>(radical_powers(A).size());
}

Vec QuotientMap::lift(const Vec& v) const {
    if (reps.empty()) throw std::logic_error("lift from zero quotient");
    Vec r(reps[0].size(), Scalar(0));
    for (size_t i = 0; i < reps.size(); ++i)
        if (!v[i].is_zero()) r = vec_add(r, vec_scale(reps[i], v[i]));
    return r;
}

QuotientMap quotient_by_ideal(const Algebra& A, const Subspace& ideal) {
    QuotientMap out;
    int n = A.dim, d = ideal.dim();
    int q = n - d;
    if (q == 0) {
        out.proj = Mat(n, 0);
        return out;
    }
    std::vector<Vec> full = extend_basis(ideal.basis, n);
    std::vector<Vec> reps(full.begin() + d, full.end());
    Mat B = Mat::from_rows(full, n);
    auto Binv = inverse(B);
    if (!Binv) throw std::logic_error("basis extension failed");
    // projection to the representative coordinates
    Mat proj(n, q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < q; ++j) proj.at(i, j) = Binv->at(i, d + j);
    auto pr = [&](const Vec& v) { return vec_mat(v, proj); };

    std::vector<Scalar> sc(static_cast<size_t>(q) * q * q, Scalar(0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            Vec prod = pr(A.mul(reps[i], reps[j]));
            for (int k = 0; k < q; ++k) sc[(static_cast<size_t>(i) * q + j) * q + k] = prod[k];
        }
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) labels[i] = "q" + std::to_string(i);
    std::optional<Vec> om;
    if (A.omega) om = pr(*A.omega);
    out.alg = Algebra::create(q, std::move(labels), std::move(sc), pr(A.unit), std::move(om), A.field, false);
    out.proj = std::move(proj);
    out.reps = std::move(reps);
    return out;
}

Vec SubalgebraMap::embed(const Vec& v) const {
    Vec r(basis.empty() ? 0 : basis[0].size(), Scalar(0));
    for (size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) r = vec_add(r, vec_scale(basis[i], v[i]));
    return r;
}

Vec SubalgebraMap::restrict(const Vec& v) const {
    auto c = coords_in(basis, v);
    if (!c) throw std::logic_error("vector not in subalgebra span");
    return *c;
}

SubalgebraMap subalgebra(const Algebra& A, const std::vector<Vec>& span_vectors, const Vec& unit) {
    Subspace S = span_of(span_vectors, A.dim);
    int s = S.dim();
    if (s == 0) throw InputError("empty subalgebra");
    SubalgebraMap out;
    out.basis = S.basis;
    std::vector<Scalar> sc(static_cast<size_t>(s) * s * s, Scalar(0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            auto prod = coords_in(out.basis, A.mul(out.basis[i], out.basis[j]));
            if (!prod) throw InputError("span is not multiplicatively closed");
            for (int k = 0; k < s; ++k) sc[(static_cast<size_t>(i) * s + j) * s + k] = (*prod)[k];
        }
    auto uc = coords_in(out.basis, unit);
    if (!uc) throw InputError("unit not inside subalgebra span");
    std::vector<std::string> labels(s);
    for (int i = 0; i < s; ++i) labels[i] = "s" + std::to_string(i);
    std::optional<Vec> om;
    if (A.omega) {
        // carry the corner of omega when it lands in the span
        Vec w = A.mul(A.mul(unit, *A.omega), unit);
        auto wc = coords_in(out.basis, w);
        if (wc) om = *wc;
    }
    out.alg = Algebra::create(s, std::move(labels), std::move(sc), *uc, std::move(om), A.field, false);
    return out;
}

SubalgebraMap corner(const Algebra& A, const Vec& e) {
    std::vector<Vec> gens;
    for (int i = 0; i < A.dim; ++i) gens.push_back(A.mul(A.mul(e, A.basis_vec(i)), e));
    return subalgebra(A, gens, e);
}

// -- idempotent machinery ------------------------------------------------------

namespace {

bool is_idempotent(const Algebra& A, const Vec& u) { return A.mul(u, u) == u; }

// cubic Newton polish of an approximate idempotent (exact modulo a nilpotent
// ideal); converges J-adically
Vec polish_idempotent(const Algebra& A, Vec u) {
    for (int it = 0; it < 40; ++it) {
        if (is_idempotent(A, u)) return u;
        Vec u2 = A.mul(u, u);
        Vec u3 = A.mul(u2, u);
        // 3u^2 - 2u^3
        u = vec_sub(vec_scale(u2, Scalar(3)), vec_scale(u3, Scalar(2)));
    }
    throw std::logic_error("idempotent polishing did not converge");
}

// Evaluate a scalar polynomial at an algebra element.
Vec eval_on_element(const Algebra& A, const SPoly& p, const Vec& a) {
    Vec r(A.dim, Scalar(0));
    Vec pw = A.unit;
    for (size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_zero()) r = vec_add(r, vec_scale(pw, p[i]));
        if (i + 1 < p.size()) pw = A.mul(pw, a);
    }
    return r;
}

SPoly sp_from_q(const QPoly& q) {
    SPoly p(q.size());
    for (size_t i = 0; i < q.size(); ++i) p[i] = Scalar(q[i]);
    return p;
}

// Try to write m (squarefree) as a product of two nontrivial coprime factors.
std::optional<std::pair<SPoly, SPoly>> coprime_split(const SPoly& m, const FieldPtr& field) {
    if (sp_deg(m) < 2) return std::nullopt;
    auto roots = sp_field_roots(m, field);
    if (!roots.roots.empty()) {
        const Scalar& r = roots.roots[0].first;
        SPoly lin = {r.neg(), Scalar(1)};
        SPoly rest = sp_divmod(m, lin).first;
        if (sp_deg(rest) >= 1) return std::make_pair(lin, rest);
        return std::nullopt;
    }
    // no roots in the field; try rational factorization into higher-degree parts
    bool all_rat = true;
    for (const auto& c : m)
        if (!c.is_rational()) { all_rat = false; break; }
    if (all_rat && sp_deg(m) <= 4) {
        QPoly q(m.size());
        for (size_t i = 0; i < m.size(); ++i) q[i] = m[i].rat();
        auto fac = qp_factor(q);
        if (fac.size() >= 2) {
            SPoly g = sp_from_q(fac[0].poly);
            SPoly h = {Scalar(1)};
            for (size_t i = 1; i < fac.size(); ++i)
                for (int t = 0; t < fac[i].mult; ++t) h = sp_mul(h, sp_from_q(fac[i].poly));
            return std::make_pair(g, h);
        }
    }
    return std::nullopt;
}

struct SPolyBezout { SPoly g, s, t; };
SPolyBezout sp_xgcd(const SPoly& a, const SPoly& b) {
    SPoly r0 = sp_trim(a), r1 = sp_trim(b);
    SPoly s0 = {Scalar(1)}, s1 = {};
    SPoly t0 = {}, t1 = {Scalar(1)};
    while (sp_deg(r1) >= 0) {
        auto [q, r] = sp_divmod(r0, r1);
        SPoly s2 = sp_sub(s0, sp_mul(q, s1));
        SPoly t2 = sp_sub(t0, sp_mul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    Scalar lead = r0[sp_deg(r0)].inverse();
    auto sc = [&](SPoly p) { for (auto& c : p) c *= lead; return p; };
    return {sc(r0), sc(s0), sc(t0)};
}

// Idempotent from a coprime factorization m = g*h of the minimal polynomial
// of a: the image of (s g)(a) where s g + t h = 1.
Vec crt_idempotent(const Algebra& A, const Vec& a, const SPoly& g, const SPoly& h) {
    auto bez = sp_xgcd(g, h);
    if (sp_deg(bez.g) != 0) throw std::logic_error("factors not coprime");
    SPoly sg = sp_mul(bez.s, g);
    Vec u = eval_on_element(A, sg, a);
    if (!is_idempotent(A, u)) throw std::logic_error("CRT element is not idempotent");
    return u;
}

// candidate elements used to search for a splitting of a semisimple algebra
std::vector<Vec> split_candidates(const Algebra& A) {
    std::vector<Vec> cands;
    for (int i = 0; i < A.dim; ++i) cands.push_back(A.basis_vec(i));
    for (int i = 0; i < A.dim; ++i)
        for (int j = i + 1; j < A.dim; ++j) {
            cands.push_back(vec_add(A.basis_vec(i), A.basis_vec(j)));
            cands.push_back(vec_sub(A.basis_vec(i), A.basis_vec(j)));
        }
    for (int i = 0; i < A.dim && static_cast<int>(cands.size()) < 4 * A.dim * A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            cands.push_back(A.mul(A.basis_vec(i), A.basis_vec(j)));
    return cands;
}

// A proper idempotent of a semisimple algebra, or a structured failure.
std::optional<Vec> find_proper_idempotent(const Algebra& S, SPoly& witness) {
    Subspace Z = center_subspace(S);
    std::vector<Vec> cands;
    if (Z.dim() > 1) {
        cands = Z.basis;
        for (size_t i = 0; i + 1 < Z.basis.size(); ++i)
            cands.push_back(vec_add(Z.basis[i], Z.basis[i + 1]));
    } else {
        cands = split_candidates(S);
    }
    for (const auto& a : cands) {
        SPoly m = element_min_poly(S, a);
        if (sp_deg(m) < 2) continue;
        auto split = coprime_split(m, S.field);
        if (split) {
            Vec u = crt_idempotent(S, a, split->first, split->second);
            if (!vec_is_zero(u) && u != S.unit) return u;
            continue;
        }
        if (sp_deg(witness) < 2) witness = m;
    }
    return std::nullopt;
}

std::vector<Vec> complete_primitive_idempotents(const Algebra& A);

std::vector<Vec> split_via_corner(const Algebra& A, const Vec& e) {
    SubalgebraMap C = corner(A, e);
    std::vector<Vec> inner = complete_primitive_idempotents(*C.alg);
    std::vector<Vec> out;
    for (const auto& u : inner) out.push_back(C.embed(u));
    return out;
}

std::vector<Vec> complete_primitive_idempotents(const Algebra& A) {
    Subspace J = jacobson_radical(A);
    if (A.dim - J.dim() == 1) return {A.unit};  // local
    QuotientMap bar = quotient_by_ideal(A, J);
    SPoly witness;
    auto ubar = find_proper_idempotent(*bar.alg, witness);
    if (!ubar)
        throw NonSplitError(NonSplitError::Kind::SemisimpleQuotient, witness,
                            "semisimple quotient has a non-matrix simple summand");
    Vec e = polish_idempotent(A, bar.lift(*ubar));
    Vec f = vec_sub(A.unit, e);
    std::vector<Vec> out = split_via_corner(A, e);
    std::vector<Vec> rest = split_via_corner(A, f);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

bool is_primitive_idempotent(const Algebra& A, const Vec& e) {
    if (!is_idempotent(A, e) || vec_is_zero(e)) return false;
    SubalgebraMap C = corner(A, e);
    Subspace Jc = jacobson_radical(*C.alg);
    return C.alg->dim - Jc.dim() == 1;
}

void validate_idempotent_set(const Algebra& A, const IdempotentSet& e, bool check_primitive,
                             bool check_complete) {
    Vec sum(A.dim, Scalar(0));
    for (int i = 0; i < e.size(); ++i) {
        if (!is_idempotent(A, e.elements[i])) throw InputError("element " + std::to_string(i) + " is not idempotent");
        sum = vec_add(sum, e.elements[i]);
        for (int j = 0; j < e.size(); ++j) {
            if (i == j) continue;
            if (!vec_is_zero(A.mul(e.elements[i], e.elements[j])))
                throw InputError("idempotents " + std::to_string(i) + "," + std::to_string(j) + " not orthogonal");
        }
    }
    if (check_complete && sum != A.unit) throw InputError("idempotents do not sum to 1");
    if (check_primitive)
        for (int i = 0; i < e.size(); ++i)
            if (!is_primitive_idempotent(A, e.elements[i]))
                throw InputError("idempotent " + std::to_string(i) + " is not primitive");
}

IdempotentSet lift_idempotents(const Algebra& A) {
    IdempotentSet out;
    out.elements = complete_primitive_idempotents(A);
    validate_idempotent_set(A, out, false);
    return out;
}

SemisimpleStructure semisimple_structure(const Algebra& A, const IdempotentSet& idems) {
    SemisimpleStructure S;
    S.bar = quotient_by_ideal(A, jacobson_radical(A));
    const Algebra& Abar = *S.bar.alg;
    // primitive central idempotents of the semisimple quotient
    Subspace Zsp = center_subspace(Abar);
    SubalgebraMap Z = subalgebra(Abar, Zsp.basis, Abar.unit);
    std::vector<Vec> zs = complete_primitive_idempotents(*Z.alg);
    for (const auto& z : zs) {
        SimpleBlockInfo blk;
        blk.central_idem = Z.embed(z);
        S.blocks.push_back(std::move(blk));
    }
    for (int i = 0; i < idems.size(); ++i) {
        Vec ebar = S.bar.project(idems.elements[i]);
        bool placed = false;
        for (auto& blk : S.blocks) {
            if (Abar.mul(blk.central_idem, ebar) == ebar) {
                blk.members.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("idempotent not contained in a single block");
    }
    for (auto& blk : S.blocks) {
        if (blk.members.empty()) throw std::logic_error("simple block without idempotents");
        blk.matrix_size = static_cast<int>(blk.members.size());
        SubalgebraMap B = corner(Abar, blk.central_idem);
        if (B.alg->dim != blk.matrix_size * blk.matrix_size) {
            SPoly w = element_min_poly(*B.alg, B.alg->basis_vec(0));
            throw NonSplitError(NonSplitError::Kind::SemisimpleQuotient, w,
                                "simple summand is not a matrix algebra over the base field");
        }
    }
    return S;
}

Scalar simple_block_trace(const Algebra& A, const SemisimpleStructure& S, int b, const Vec& a) {
    const Algebra& Abar = *S.bar.alg;
    const auto& blk = S.blocks[b];
    Vec abar = S.bar.project(a);
    Vec za = Abar.mul(blk.central_idem, abar);
    // trace on the left regular representation of the block = n * (simple trace)
    SubalgebraMap B = corner(Abar, blk.central_idem);
    Scalar t = trace(B.alg->left_mul(B.restrict(za)));
    return t / Scalar(static_cast<long>(blk.matrix_size));
}

BlockDecomposition indecomposable_blocks(const Algebra& A) {
    Subspace Zsp = center_subspace(A);
    SubalgebraMap Z = subalgebra(A, Zsp.basis, A.unit);
    std::vector<Vec> zs = complete_primitive_idempotents(*Z.alg);
    BlockDecomposition out;
    for (const auto& z : zs) out.central_idempotents.push_back(Z.embed(z));
    // deterministic order: by first nonzero coordinate pattern
    std::sort(out.central_idempotents.begin(), out.central_idempotents.end(),
              [](const Vec& x, const Vec& y) {
                  for (size_t i = 0; i < x.size(); ++i) {
                      if (x[i].is_zero() != y[i].is_zero()) return !x[i].is_zero();
                  }
                  return false;
              });
    for (const auto& z : out.central_idempotents) out.blocks.push_back(corner(A, z));
    return out;
}

std::vector<OmegaEigen> omega_spectrum(const Algebra& A) {
    if (!A.omega) throw InputError("algebra has no declared omega");
    SPoly m = element_min_poly(A, *A.omega);
    auto roots = sp_field_roots(m, A.field);
    if (sp_deg(roots.remainder) > 0)
        throw NonSplitError(NonSplitError::Kind::Omega, roots.remainder,
                            "omega minimal polynomial has a nonlinear factor");
    std::vector<OmegaEigen> out;
    for (auto& [r, mult] : roots.roots) out.push_back({r, mult});
    return out;
}

std::vector<int> choose_class_representatives(const Algebra& A, const IdempotentSet& idems) {
    SemisimpleStructure S = semisimple_structure(A, idems);
    std::vector<int> chosen;
    for (const auto& blk : S.blocks) {
        int first = *std::min_element(blk.members.begin(), blk.members.end());
        chosen.push_back(first);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

BasicAlgebraResult basic_algebra(const Algebra& A, const IdempotentSet& idems) {
    validate_idempotent_set(A, idems, true, false);
    BasicAlgebraResult out;
    Vec e(A.dim, Scalar(0));
    for (const auto& u : idems.elements) e = vec_add(e, u);
    if (!is_idempotent(A, e)) throw InputError("chosen idempotents do not sum to an idempotent");
    out.chosen = idems;
    out.e = e;
    out.basic = corner(A, e);
    // right module Ae over eAe
    std::vector<Vec> gens;
    for (int i = 0; i < A.dim; ++i) gens.push_back(A.mul(A.basis_vec(i), e));
    Subspace Ae = span_of(gens, A.dim);
    out.module_basis = Ae.basis;
    int md = Ae.dim();
    for (int p = 0; p < out.basic.alg->dim; ++p) {
        Vec pe = out.basic.basis[p];
        Mat act(md, md);
        for (int j = 0; j < md; ++j) {
            auto cc = coords_in(out.module_basis, A.mul(out.module_basis[j], pe));
            if (!cc) throw std::logic_error("Ae not closed under right eAe-action");
            for (int k = 0; k < md; ++k) act.at(j, k) = (*cc)[k];
        }
        out.module_action.push_back(std::move(act));
    }
    return out;
}

}  // namespace pst
