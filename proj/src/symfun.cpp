#include "pst/symfun.hpp"

#include <algorithm>
#include <sstream>

namespace pst {

SymmetricFunctional SymmetricFunctional::create(AlgebraPtr A, Vec values) {
    if (static_cast<int>(values.size()) != A->dim) throw InputError("functional value count != dim");
    SymmetricFunctional phi{std::move(A), std::move(values)};
    const Algebra& alg = *phi.algebra;
    for (int i = 0; i < alg.dim; ++i)
        for (int j = i + 1; j < alg.dim; ++j) {
            Scalar ab = phi.eval(alg.mul(alg.basis_vec(i), alg.basis_vec(j)));
            Scalar ba = phi.eval(alg.mul(alg.basis_vec(j), alg.basis_vec(i)));
            if (!(ab == ba))
                throw InputError("functional is not symmetric on basis pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return phi;
}

Subspace functional_radical(const SymmetricFunctional& phi) {
    const Algebra& A = *phi.algebra;
    int n = A.dim;
    // a in Rad <=> phi(b_x a b_y) = 0 for all x, y
    Mat sys(n * n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int t = 0; t < n; ++t) {
                Vec prod = A.mul(A.mul(A.basis_vec(x), A.basis_vec(t)), A.basis_vec(y));
                sys.at(x * n + y, t) = phi.eval(prod);
            }
        }
    return span_of(nullspace(sys), n);
}

Mat gram_matrix(const SymmetricFunctional& phi) {
    const Algebra& A = *phi.algebra;
    Mat G(A.dim, A.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            G.at(i, j) = phi.eval(A.mul(A.basis_vec(i), A.basis_vec(j)));
    return G;
}

FunctionalSplit split_semisimple_part(const SymmetricFunctional& phi, const IdempotentSet& idems) {
    const Algebra& A = *phi.algebra;
    if (functional_radical(phi).dim() != 0)
        throw InputError("functional has a nonzero radical; quotient first");
    socle(A, true);  // symmetric algebras have matching socles
    FunctionalSplit out{semisimple_structure(A, idems), {}, phi, phi};
    Vec pi_values(A.dim, Scalar(0));
    for (size_t b = 0; b < out.structure.blocks.size(); ++b) {
        const auto& blk = out.structure.blocks[b];
        Scalar w = phi.eval(idems.elements[blk.members[0]]);
        for (int m : blk.members) {
            if (!(phi.eval(idems.elements[m]) == w))
                throw std::logic_error("symmetric functional differs within one block");
        }
        out.block_weights.push_back(w);
        if (w.is_zero()) continue;
        for (int t = 0; t < A.dim; ++t)
            pi_values[t] += w * simple_block_trace(A, out.structure, static_cast<int>(b), A.basis_vec(t));
    }
    out.pi = SymmetricFunctional::create(phi.algebra, pi_values);
    Vec phi0_values(A.dim);
    for (int t = 0; t < A.dim; ++t) phi0_values[t] = phi.values[t] - pi_values[t];
    out.phi0 = SymmetricFunctional::create(phi.algebra, phi0_values);
    for (const auto& e : idems.elements)
        if (!out.phi0.eval(e).is_zero())
            throw std::logic_error("semisimple part extraction failed on an idempotent");
    return out;
}

// ---------------------------------------------------------------------------

int OmegaBasis::find(int i, int j, int s) const {
    for (int t = 0; t < size(); ++t)
        if (elements[t].i == i && elements[t].j == j && elements[t].s == s) return t;
    return -1;
}

namespace {

struct PairingCtx {
    const Algebra& P;
    const SymmetricFunctional& phi;
    Scalar form(const Vec& a, const Vec& b) const { return phi.eval(P.mul(a, b)); }
};

// basis of the intersection of a subspace with a Peirce block
std::vector<Vec> intersect_basis(const Subspace& S, const Subspace& T) {
    return subspace_intersect(S, T).basis;
}

// Pick an element of V (row-span basis) with preference for Loewy depth
// `want` (deepest index into powers that still contains it).
Vec pick_with_depth(const std::vector<Vec>& V_basis, const std::vector<Subspace>& powers,
                    int want, int ambient) {
    if (V_basis.empty()) throw ObstructionError("no candidate available for a basis layer");
    Subspace V = span_of(V_basis, ambient);
    for (int depth = want; depth >= 1; --depth) {
        if (depth >= static_cast<int>(powers.size())) continue;
        auto inside = intersect_basis(V, powers[depth]);
        for (const auto& v : inside) {
            bool deeper = depth + 1 < static_cast<int>(powers.size()) &&
                          contains(powers[depth + 1], v);
            if (!deeper) return v;
        }
    }
    return V_basis.front();
}

// Solve the homogeneous linear system given by rows(test) . x = rhs entries,
// inside the row space spanned by `space` (coordinates relative to ambient).
// Returns particular solution and kernel directions, both as ambient vectors.
struct AffineSolution {
    bool ok = false;
    Vec particular;
    std::vector<Vec> kernel;
};

AffineSolution solve_in_span(const std::vector<Vec>& space,
                             const std::vector<Vec>& constraint_rows,
                             const std::vector<Scalar>& rhs, int ambient) {
    AffineSolution out;
    if (space.empty()) return out;
    int m = static_cast<int>(constraint_rows.size());
    int k = static_cast<int>(space.size());
    Mat sys(m, k);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < k; ++c) sys.at(r, c) = dot(constraint_rows[r], space[c]);
    auto sol = solve(sys, rhs);
    if (!sol) return out;
    out.ok = true;
    out.particular = Vec(ambient, Scalar(0));
    for (int c = 0; c < k; ++c)
        if (!(*sol)[c].is_zero()) out.particular = vec_add(out.particular, vec_scale(space[c], (*sol)[c]));
    for (const auto& kv : nullspace(sys)) {
        Vec dir(ambient, Scalar(0));
        for (int c = 0; c < k; ++c)
            if (!kv[c].is_zero()) dir = vec_add(dir, vec_scale(space[c], kv[c]));
        out.kernel.push_back(std::move(dir));
    }
    return out;
}

// Make <v, v> = 0 by adding a correction from `dirs`, preserving the linear
// constraints that all of `dirs` already satisfy.
Vec normalize_isotropic(const PairingCtx& ctx, Vec v, const std::vector<Vec>& dirs,
                        const FieldPtr& field) {
    Scalar c = ctx.form(v, v);
    if (c.is_zero()) return v;
    for (const auto& z : dirs) {
        Scalar vz = ctx.form(v, z), zz = ctx.form(z, z);
        if (!vz.is_zero() && zz.is_zero()) {
            Scalar lam = c.neg() / (Scalar(2) * vz);
            return vec_add(v, vec_scale(z, lam));
        }
    }
    for (const auto& z : dirs) {
        Scalar vz = ctx.form(v, z), zz = ctx.form(z, z);
        if (zz.is_zero()) continue;
        // c + 2 lam vz + lam^2 zz = 0
        Scalar disc = Scalar(4) * vz * vz - Scalar(4) * c * zz;
        auto root = scalar_sqrt(disc, field);
        if (root) {
            Scalar lam = (vz.neg() * Scalar(2) + *root) / (Scalar(2) * zz);
            Vec cand = vec_add(v, vec_scale(z, lam));
            if (ctx.form(cand, cand).is_zero() && !vec_is_zero(cand)) return cand;
            lam = (vz.neg() * Scalar(2) - *root) / (Scalar(2) * zz);
            cand = vec_add(v, vec_scale(z, lam));
            if (ctx.form(cand, cand).is_zero() && !vec_is_zero(cand)) return cand;
        }
    }
    throw ObstructionError("cannot make a layer element isotropic over the base field");
}

}  // namespace

OmegaBasis build_omega_basis(const AlgebraPtr& Pp, const SymmetricFunctional& phi,
                             const IdempotentSet& idems) {
    const Algebra& P = *Pp;
    const int n = P.dim;
    const int k = idems.size();
    validate_idempotent_set(P, idems, false);
    if (functional_radical(phi).dim() != 0) throw InputError("Rad(phi) != 0");
    for (const auto& e : idems.elements)
        if (!phi.eval(e).is_zero())
            throw InputError("phi does not vanish on the idempotents; split the semisimple part first");
    {
        auto S = semisimple_structure(P, idems);
        for (const auto& blk : S.blocks)
            if (blk.matrix_size != 1) throw InputError("algebra is not basic");
        if (static_cast<int>(S.blocks.size()) != k) throw InputError("idempotent set is not one-per-class");
    }
    if (indecomposable_blocks(P).blocks.size() != 1)
        throw InputError("algebra is decomposable; split into blocks first");

    OmegaBasis om;
    om.P = Pp;
    om.phi = phi;
    om.idems = idems;
    PairingCtx ctx{P, phi};

    Subspace soc = socle(P, true);
    if (soc.dim() != k) throw std::logic_error("socle dimension != number of idempotent classes");

    // socle duals f_i: f_i in soc with phi(e_j f_i) = delta_ij
    {
        Mat sys(k, k);
        for (int j = 0; j < k; ++j)
            for (int t = 0; t < k; ++t)
                sys.at(j, t) = phi.eval(P.mul(idems.elements[j], soc.basis[t]));
        for (int i = 0; i < k; ++i) {
            Vec rhs(k, Scalar(0));
            rhs[i] = Scalar(1);
            auto c = solve(sys, rhs);
            if (!c) throw std::logic_error("socle dual system inconsistent");
            Vec f(n, Scalar(0));
            for (int t = 0; t < k; ++t)
                if (!(*c)[t].is_zero()) f = vec_add(f, vec_scale(soc.basis[t], (*c)[t]));
            // f_i must live in the diagonal Peirce block
            Vec efe = P.mul(P.mul(idems.elements[i], f), idems.elements[i]);
            if (!(efe == f)) throw std::logic_error("socle dual escapes its Peirce block");
            om.socle_duals.push_back(std::move(f));
        }
    }

    auto powers = radical_powers(P);  // powers[s] = J^{s+1}; re-index below
    std::vector<Subspace> jp;         // jp[s] = J^s, with jp[0] = P
    jp.push_back(span_rows(Mat::identity(n)));
    for (auto& s : powers) jp.push_back(s);

    // Peirce blocks
    std::vector<std::vector<Subspace>> peirce(k, std::vector<Subspace>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<Vec> gens;
            for (int t = 0; t < n; ++t)
                gens.push_back(P.mul(P.mul(idems.elements[i], P.basis_vec(t)), idems.elements[j]));
            peirce[i][j] = span_of(gens, n);
        }

    om.d.assign(k, std::vector<int>(k, 0));
    Subspace J = jp[1];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int jdim = subspace_intersect(J, peirce[i][j]).dim();
            int sdim = subspace_intersect(soc, peirce[i][j]).dim();
            if (i == j && sdim != 1) throw std::logic_error("diagonal socle piece not one-dimensional");
            if (i != j && sdim != 0) throw std::logic_error("off-diagonal socle piece nonzero");
            om.d[i][j] = jdim - sdim;
        }

    // containers for chosen elements per block
    auto push_elem = [&](int i, int j, int s, Vec v) {
        om.elements.push_back({i, j, s, std::move(v)});
    };

    // diagonal blocks
    for (int i = 0; i < k; ++i) {
        int d = om.d[i][i];
        push_elem(i, i, 0, idems.elements[i]);
        std::vector<Vec> chosen;  // rho_1..rho_d as they are built (index s-1)
        chosen.resize(d);
        auto Mspace = intersect_basis(J, peirce[i][i]);  // contains f_i
        // low side
        for (int s = 1; s <= d / 2; ++s) {
            std::vector<Vec> rows;
            std::vector<Scalar> rhs;
            rows.push_back(phi.values);  // phi(w) = 0
            rhs.push_back(Scalar(0));
            for (int a = 1; a < s; ++a) {
                // <w, rho_a> = phi(w rho_a), linear in w
                Vec row(n, Scalar(0));
                for (int t = 0; t < n; ++t) row[t] = phi.eval(P.mul(P.basis_vec(t), chosen[a - 1]));
                rows.push_back(std::move(row));
                rhs.push_back(Scalar(0));
            }
            auto sol = solve_in_span(Mspace, rows, rhs, n);
            if (!sol.ok || sol.kernel.empty())
                throw ObstructionError("no isotropic layer candidates (diagonal block)");
            Vec v = pick_with_depth(sol.kernel, jp, s, n);
            v = normalize_isotropic(ctx, v, sol.kernel, P.field);
            chosen[s - 1] = v;
        }
        // middle element for odd d
        if (d % 2 == 1) {
            int m = (d + 1) / 2;
            std::vector<Vec> rows;
            std::vector<Scalar> rhs;
            rows.push_back(phi.values);
            rhs.push_back(Scalar(0));
            for (int a = 1; a <= d / 2; ++a) {
                Vec row(n, Scalar(0));
                for (int t = 0; t < n; ++t) row[t] = phi.eval(P.mul(P.basis_vec(t), chosen[a - 1]));
                rows.push_back(row);
                rhs.push_back(Scalar(0));
            }
            auto sol = solve_in_span(Mspace, rows, rhs, n);
            if (!sol.ok) throw ObstructionError("middle layer system inconsistent");
            std::vector<Vec> cands = sol.kernel;
            for (size_t a = 0; a < sol.kernel.size(); ++a)
                for (size_t b = a + 1; b < sol.kernel.size(); ++b) {
                    cands.push_back(vec_add(sol.kernel[a], sol.kernel[b]));
                    cands.push_back(vec_sub(sol.kernel[a], sol.kernel[b]));
                }
            bool done = false;
            for (auto v : cands) {
                Scalar c = ctx.form(v, v);
                if (c.is_zero()) continue;
                auto root = scalar_sqrt(c, P.field);
                if (!root) continue;
                v = vec_scale(v, root->inverse());
                // exact square condition v*v = f_i, corrected along the kernel
                for (int it = 0; it < 6 && !(P.mul(v, v) == om.socle_duals[i]); ++it) {
                    Vec target = vec_sub(om.socle_duals[i], P.mul(v, v));
                    // z with v z + z v = target and <v, z> = 0
                    std::vector<Vec> rws;
                    std::vector<Scalar> rh;
                    Vec vrow(n, Scalar(0));
                    for (int t = 0; t < n; ++t) vrow[t] = phi.eval(P.mul(P.basis_vec(t), v));
                    for (int t = 0; t < n; ++t) {
                        Vec row(n, Scalar(0));
                        for (int u = 0; u < n; ++u) {
                            Vec e_u = P.basis_vec(u);
                            row[u] = P.mul(v, e_u)[t] + P.mul(e_u, v)[t];
                        }
                        rws.push_back(row);
                        rh.push_back(target[t]);
                    }
                    rws.push_back(vrow);
                    rh.push_back(Scalar(0));
                    auto fix = solve_in_span(sol.kernel, rws, rh, n);
                    if (!fix.ok) break;
                    v = vec_add(v, fix.particular);
                }
                if (P.mul(v, v) == om.socle_duals[i] && ctx.form(v, v) == Scalar(1)) {
                    chosen[m - 1] = v;
                    done = true;
                    break;
                }
            }
            if (!done) throw ObstructionError("middle layer element cannot be normalized in the base field");
        }
        // high side: partner of s is d+1-s
        for (int t = d; t > d / 2 + (d % 2); --t) {
            int s = d + 1 - t;  // partner (already chosen)
            std::vector<Vec> rows;
            std::vector<Scalar> rhs;
            rows.push_back(phi.values);
            rhs.push_back(Scalar(0));
            for (int a = 1; a <= d; ++a) {
                if (a == t || chosen[a - 1].empty()) continue;  // unbuilt partners constrain later
                Vec row(n, Scalar(0));
                for (int u = 0; u < n; ++u) row[u] = phi.eval(P.mul(P.basis_vec(u), chosen[a - 1]));
                rows.push_back(row);
                rhs.push_back(a + t == d + 1 ? Scalar(1) : Scalar(0));
            }
            // products: rho_s * z = f_i and z * rho_s = f_i
            const Vec& rs = chosen[s - 1];
            for (int u = 0; u < n; ++u) {
                Vec row(n, Scalar(0));
                for (int w = 0; w < n; ++w) row[w] = P.mul(rs, P.basis_vec(w))[u];
                rows.push_back(row);
                rhs.push_back(om.socle_duals[i][u]);
            }
            for (int u = 0; u < n; ++u) {
                Vec row(n, Scalar(0));
                for (int w = 0; w < n; ++w) row[w] = P.mul(P.basis_vec(w), rs)[u];
                rows.push_back(row);
                rhs.push_back(om.socle_duals[i][u]);
            }
            auto sol = solve_in_span(Mspace, rows, rhs, n);
            if (!sol.ok)
                throw ObstructionError("dual layer system inconsistent (diagonal block)");
            Vec v = sol.particular;
            if (!ctx.form(v, v).is_zero()) v = normalize_isotropic(ctx, v, sol.kernel, P.field);
            chosen[t - 1] = v;
        }
        for (int s = 1; s <= d; ++s) push_elem(i, i, s, chosen[s - 1]);
        push_elem(i, i, d + 1, om.socle_duals[i]);
    }

    // off-diagonal blocks, handled as (i,j)/(j,i) pairs
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int d = om.d[i][j];
            if (om.d[j][i] != d) throw std::logic_error("asymmetric off-diagonal layer counts");
            if (d == 0) continue;
            std::vector<Vec> U = peirce[i][j].basis;
            if (static_cast<int>(U.size()) != d) throw std::logic_error("off-diagonal block dimension mismatch");
            // order U by Loewy depth, shallow first, lexicographic within depth
            std::stable_sort(U.begin(), U.end(), [&](const Vec& a, const Vec& b) {
                auto depth = [&](const Vec& v) {
                    int t = 0;
                    while (t + 1 < static_cast<int>(jp.size()) && contains(jp[t + 1], v)) ++t;
                    return t;
                };
                return depth(a) < depth(b);
            });
            std::vector<Vec> V(d);
            bool ok = true;
            for (int t = 1; t <= d && ok; ++t) {
                // v_t in e_j P e_i with <u_a, v_t> = delta_{a, d+1-t}
                std::vector<Vec> rows;
                std::vector<Scalar> rhs;
                for (int a = 1; a <= d; ++a) {
                    Vec row(n, Scalar(0));
                    for (int u = 0; u < n; ++u) row[u] = phi.eval(P.mul(U[a - 1], P.basis_vec(u)));
                    rows.push_back(row);
                    rhs.push_back(a + t == d + 1 ? Scalar(1) : Scalar(0));
                }
                // product conditions u_{d+1-t} v_t = f_i and v_t u_{d+1-t} = f_j
                const Vec& upart = U[d - t];
                for (int u = 0; u < n; ++u) {
                    Vec row(n, Scalar(0));
                    for (int w = 0; w < n; ++w) row[w] = P.mul(upart, P.basis_vec(w))[u];
                    rows.push_back(row);
                    rhs.push_back(om.socle_duals[i][u]);
                }
                for (int u = 0; u < n; ++u) {
                    Vec row(n, Scalar(0));
                    for (int w = 0; w < n; ++w) row[w] = P.mul(P.basis_vec(w), upart)[u];
                    rows.push_back(row);
                    rhs.push_back(om.socle_duals[j][u]);
                }
                auto sol = solve_in_span(peirce[j][i].basis, rows, rhs, n);
                if (!sol.ok) { ok = false; break; }
                V[t - 1] = sol.particular;
            }
            if (!ok)
                throw ObstructionError("off-diagonal dual system inconsistent; no compatible layer basis found");
            for (int s = 1; s <= d; ++s) push_elem(i, j, s, U[s - 1]);
            for (int s = 1; s <= d; ++s) push_elem(j, i, s, V[s - 1]);
        }

    // index tables
    om.e_index.assign(k, -1);
    om.f_index.assign(k, -1);
    for (int t = 0; t < om.size(); ++t) {
        const auto& el = om.elements[t];
        if (el.i == el.j && el.s == 0) om.e_index[el.i] = t;
        if (el.i == el.j && el.s == om.d[el.i][el.i] + 1) om.f_index[el.i] = t;
    }
    om.dual_index.assign(om.size(), -1);
    for (int t = 0; t < om.size(); ++t) {
        const auto& el = om.elements[t];
        int ds = om.d[el.i][el.j] + 1 - el.s;
        int u = om.find(el.j, el.i, ds);
        if (u < 0) throw std::logic_error("dual element missing");
        om.dual_index[t] = u;
    }

    // exhaustive verification of the defining conditions
    if (om.size() != n) throw std::logic_error("basis element count != dim");
    {
        std::vector<Vec> all;
        for (const auto& el : om.elements) all.push_back(el.vec);
        if (span_of(all, n).dim() != n) throw ObstructionError("constructed set is not a basis");
    }
    om.pairing = Mat(om.size(), om.size());
    for (int u = 0; u < om.size(); ++u)
        for (int v = 0; v < om.size(); ++v) {
            Scalar p = ctx.form(om.elements[u].vec, om.elements[v].vec);
            om.pairing.at(u, v) = p;
            Scalar expect = (om.dual_index[u] == v) ? Scalar(1) : Scalar(0);
            if (!(p == expect))
                throw ObstructionError("pairing table violates duality at (" + std::to_string(u) + "," +
                                       std::to_string(v) + ")");
        }
    for (int u = 0; u < om.size(); ++u) {
        const auto& el = om.elements[u];
        // Peirce compatibility e_i rho e_j = rho
        Vec w = P.mul(P.mul(idems.elements[el.i], el.vec), idems.elements[el.j]);
        if (!(w == el.vec)) throw std::logic_error("Peirce compatibility fails");
        // product rule rho * rho^* = f_i
        Vec prod = P.mul(el.vec, om.elements[om.dual_index[u]].vec);
        if (!(prod == om.socle_duals[el.i]))
            throw ObstructionError("product rule rho rho* = f fails at element " + std::to_string(u));
    }
    return om;
}

Subspace idempotent_perp(const OmegaBasis& om) {
    const Algebra& P = *om.P;
    std::vector<Vec> gens;
    for (int t = 0; t < om.size(); ++t) {
        bool is_f = false;
        for (int i = 0; i < static_cast<int>(om.f_index.size()); ++i)
            if (om.f_index[i] == t) is_f = true;
        if (!is_f) gens.push_back(om.elements[t].vec);
    }
    Subspace P0 = span_of(gens, P.dim);
    // orthogonal complement characterization
    for (const auto& e : om.idems.elements)
        for (const auto& g : gens)
            if (!om.phi.eval(P.mul(e, g)).is_zero())
                throw std::logic_error("perp characterization fails");
    // product rule: rho mu in P0 whenever mu != rho*
    for (int u = 0; u < om.size(); ++u)
        for (int v = 0; v < om.size(); ++v) {
            if (om.dual_index[u] == v) continue;
            Vec prod = P.mul(om.elements[u].vec, om.elements[v].vec);
            if (!contains(P0, prod))
                throw std::logic_error("product of non-dual pair escapes the perp space");
        }
    return P0;
}

OmegaShift omega_shift(const SymmetricFunctional& phi, const Scalar& r) {
    const Algebra& A = *phi.algebra;
    if (!A.omega) throw InputError("omega absent");
    OmegaShift out;
    Vec shift = vec_sub(*A.omega, vec_scale(A.unit, r));
    Mat L = A.left_mul(shift);
    // annihilator {a : (omega - r) a = 0}
    out.annihilator = span_of(nullspace(transpose(L)), A.dim);
    if (out.annihilator.dim() == A.dim) {
        out.zero = true;
        return out;
    }
    out.quotient = quotient_by_ideal(A, out.annihilator);
    Vec values(out.quotient.alg->dim);
    for (int t = 0; t < out.quotient.alg->dim; ++t)
        values[t] = phi.eval(A.mul(shift, out.quotient.reps[t]));
    out.shifted = SymmetricFunctional::create(out.quotient.alg, std::move(values));
    return out;
}

}  // namespace pst
