#include "pst/pseudotrace.hpp"

#include <algorithm>

namespace pst {

Mat RightModule::act(const Vec& a) const {
    Mat m(dim, dim);
    for (int i = 0; i < algebra->dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                const Scalar& v = action[i].at(r, c);
                if (!v.is_zero()) m.at(r, c) += a[i] * v;
            }
    }
    return m;
}

RightModule RightModule::create(AlgebraPtr A, int dim, std::vector<Mat> action) {
    RightModule W{std::move(A), dim, std::move(action)};
    const Algebra& P = *W.algebra;
    if (static_cast<int>(W.action.size()) != P.dim) throw InputError("action table size != algebra dim");
    for (const auto& m : W.action)
        if (m.rows != dim || m.cols != dim) throw InputError("action matrix size mismatch");
    if (dim > 0) {
        if (!(W.act(P.unit) == Mat::identity(dim))) throw InputError("unit does not act as identity");
        for (int i = 0; i < P.dim; ++i)
            for (int j = 0; j < P.dim; ++j) {
                Mat lhs = W.act(P.mul(P.basis_vec(i), P.basis_vec(j)));
                if (!(lhs == W.action[i] * W.action[j]))
                    throw InputError("action is not multiplicative on basis pair (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    return W;
}

RightModule regular_module(const AlgebraPtr& A) {
    std::vector<Mat> action;
    for (int i = 0; i < A->dim; ++i) action.push_back(A->right_mul(A->basis_vec(i)));
    return RightModule::create(A, A->dim, std::move(action));
}

namespace {

// a small generating set of basis indices (with the unit assumed)
std::vector<int> generating_indices(const Algebra& A) {
    std::vector<int> gens;
    Subspace G = span_of({A.unit}, A.dim);
    auto close = [&](Subspace S) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Vec> prods = S.basis;
            for (const auto& x : S.basis)
                for (const auto& y : S.basis) prods.push_back(A.mul(x, y));
            Subspace T = span_of(prods, A.dim);
            if (T.dim() > S.dim()) { S = T; grew = true; }
        }
        return S;
    };
    for (int i = 0; i < A.dim && G.dim() < A.dim; ++i) {
        if (contains(G, A.basis_vec(i))) continue;
        gens.push_back(i);
        std::vector<Vec> b = G.basis;
        b.push_back(A.basis_vec(i));
        G = close(span_of(b, A.dim));
    }
    return gens;
}

}  // namespace

std::vector<Mat> module_endomorphisms(const RightModule& W) {
    const Algebra& P = *W.algebra;
    int n = W.dim;
    if (n == 0) return {};
    std::vector<int> gens = generating_indices(P);
    if (gens.empty()) return {Mat::identity(n)};  // P = span{1}
    // E act(g) - act(g) E = 0 for generators g; unknowns E_{rc} flattened
    Mat sys(static_cast<int>(gens.size()) * n * n, n * n);
    int rowi = 0;
    for (int g : gens) {
        const Mat& Ag = W.action[g];
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                // (E Ag - Ag E)_{rc} = sum_t E_{rt} Ag_{tc} - Ag_{rt} E_{tc}
                for (int t = 0; t < n; ++t) {
                    sys.at(rowi, r * n + t) += Ag.at(t, c);
                    sys.at(rowi, t * n + c) -= Ag.at(r, t);
                }
                ++rowi;
            }
    }
    std::vector<Mat> out;
    for (const auto& v : nullspace(sys)) {
        Mat E(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) E.at(r, c) = v[r * n + c];
        out.push_back(std::move(E));
    }
    return out;
}

bool is_endomorphism(const RightModule& W, const Mat& alpha) {
    for (int g : generating_indices(*W.algebra)) {
        if (!(alpha * W.action[g] == W.action[g] * alpha)) return false;
    }
    return true;
}

namespace {

std::vector<Vec> row_space_basis(const Mat& M) {
    return span_rows(M).basis;
}

// coordinates of ambient vectors relative to a basis (rows)
Vec restrict_coords(const std::vector<Vec>& basis, const Vec& v) {
    auto c = coords_in(basis, v);
    if (!c) throw std::logic_error("vector escapes an invariant subspace");
    return *c;
}

// build one layered block from an omega basis; W is already the block module
void build_layered_block(InterlockedDecomposition::Block& blk, const RightModule& W,
                         const OmegaBasis& om) {
    const Algebra& P = *om.P;
    int k = om.idems.size();
    int n = W.dim;
    blk.om = om;
    // kernel criterion for every class
    for (int i = 0; i < k; ++i) {
        Mat fi = W.act(om.socle_duals[i]);
        Subspace K = span_of(nullspace(transpose(fi)), n);
        std::vector<Vec> gen_rows;
        for (int t = 0; t < om.size(); ++t) {
            if (t == om.e_index[i]) continue;
            Mat a = W.act(om.elements[t].vec);
            for (int r = 0; r < n; ++r) gen_rows.push_back(a.row(r));
        }
        Subspace S = span_of(gen_rows, n);
        if (!subspace_eq(K, S)) {
            Vec witness;
            for (const auto& v : K.basis)
                if (!contains(S, v)) { witness = v; break; }
            if (witness.empty())
                for (const auto& v : S.basis)
                    if (!contains(K, v)) { witness = v; break; }
            throw NotInterlockedError(i, witness);
        }
    }
    // component spaces T_p: preimages of a canonical basis of W f_p
    blk.t_reps.assign(k, {});
    for (int p = 0; p < k; ++p) {
        Mat fp = W.act(om.socle_duals[p]);
        for (const auto& u : row_space_basis(fp)) {
            auto w = solve(transpose(fp), u);
            if (!w) throw std::logic_error("image basis has no preimage");
            // normalize the representative into W e_p
            blk.t_reps[p].push_back(vec_mat(*w, W.act(om.idems.elements[p])));
        }
    }
    // assemble the component basis
    std::vector<Vec> rows;
    blk.fpos.assign(k, {});
    for (int p = 0; p < k; ++p) blk.fpos[p].resize(blk.t_reps[p].size(), -1);
    for (int p = 0; p < k; ++p) {
        for (size_t ti = 0; ti < blk.t_reps[p].size(); ++ti) {
            for (int e = 0; e < om.size(); ++e) {
                if (om.elements[e].i != p) continue;
                if (e == om.f_index[p]) blk.fpos[p][ti] = static_cast<int>(rows.size());
                blk.comps.push_back({p, static_cast<int>(ti), e});
                rows.push_back(vec_mat(blk.t_reps[p][ti], W.act(om.elements[e].vec)));
            }
        }
    }
    if (static_cast<int>(rows.size()) != n)
        throw NotInterlockedError(-1, {});
    blk.comp_mat = Mat::from_rows(rows, n);
    auto inv = inverse(blk.comp_mat);
    if (!inv) throw NotInterlockedError(-1, {});
    blk.comp_inv = *inv;
}

void build_semisimple_block(InterlockedDecomposition::Block& blk, const RightModule& W,
                            const SymmetricFunctional& phi, const IdempotentSet& idems) {
    blk.semisimple = true;
    for (const auto& e : idems.elements) {
        blk.weights.push_back(phi.eval(e));
        blk.unit_bases.push_back(row_space_basis(W.act(e)));
    }
}

// restriction of an ambient endomorphism to an invariant subspace
Mat restrict_endo(const std::vector<Vec>& basis, const Mat& alpha) {
    int t = static_cast<int>(basis.size());
    Mat R(t, t);
    for (int j = 0; j < t; ++j) {
        Vec img = vec_mat(basis[j], alpha);
        Vec c = restrict_coords(basis, img);
        for (int i = 0; i < t; ++i) R.at(j, i) = c[i];
    }
    return R;
}

}  // namespace

Scalar InterlockedDecomposition::pseudo_trace(const Mat& alpha) const {
    if (!is_endomorphism(W, alpha))
        throw NotEndomorphismError("matrix does not commute with the module action");
    return pseudo_trace_unchecked(alpha);
}

Scalar InterlockedDecomposition::pseudo_trace_unchecked(const Mat& alpha) const {
    Scalar total(0);
    for (const auto& blk : blocks) {
        if (blk.Wb.dim == 0) continue;
        Mat a = restrict_endo(blk.wbasis, alpha);
        if (blk.semisimple) {
            for (size_t i = 0; i < blk.weights.size(); ++i) {
                if (blk.unit_bases[i].empty() || blk.weights[i].is_zero()) continue;
                total += blk.weights[i] * trace(restrict_endo(blk.unit_bases[i], a));
            }
        } else {
            const OmegaBasis& om = *blk.om;
            for (int s = 0; s < om.idems.size(); ++s)
                for (size_t ti = 0; ti < blk.t_reps[s].size(); ++ti) {
                    Vec img = vec_mat(blk.t_reps[s][ti], a);
                    Vec comps = vec_mat(img, blk.comp_inv);
                    total += comps[blk.fpos[s][ti]];
                }
        }
    }
    return total;
}

namespace {

InterlockedDecomposition build_decomposition(const RightModule& W, const SymmetricFunctional& phi,
                                             const OmegaBasis* preset) {
    const AlgebraPtr P = W.algebra;
    InterlockedDecomposition D{W, phi, {}};
    if (W.dim == 0) return D;
    if (functional_radical(phi).dim() != 0)
        throw UnsupportedFunctionalError("functional has a nonzero radical");

    if (preset) {
        InterlockedDecomposition::Block blk;
        blk.wbasis = row_space_basis(Mat::identity(W.dim));
        blk.Wb = W;
        blk.phi_b = phi;
        build_layered_block(blk, W, *preset);
        D.blocks.push_back(std::move(blk));
        return D;
    }

    auto split = indecomposable_blocks(*P);
    for (size_t b = 0; b < split.blocks.size(); ++b) {
        InterlockedDecomposition::Block blk;
        blk.onto = split.blocks[b];
        const AlgebraPtr B = blk.onto.alg;
        // block part of the module
        blk.wbasis = row_space_basis(W.act(split.central_idempotents[b]));
        int bn = static_cast<int>(blk.wbasis.size());
        std::vector<Mat> act;
        for (int t = 0; t < B->dim; ++t) {
            Mat m(bn, bn);
            Mat amb = W.act(blk.onto.basis[t]);
            for (int j = 0; j < bn; ++j) {
                Vec c = restrict_coords(blk.wbasis, vec_mat(blk.wbasis[j], amb));
                for (int i = 0; i < bn; ++i) m.at(j, i) = c[i];
            }
            act.push_back(std::move(m));
        }
        blk.Wb = RightModule::create(B, bn, std::move(act));
        Vec phib(B->dim);
        for (int t = 0; t < B->dim; ++t) phib[t] = phi.eval(blk.onto.basis[t]);
        blk.phi_b = SymmetricFunctional::create(B, phib);

        IdempotentSet idems = lift_idempotents(*B);
        auto S = semisimple_structure(*B, idems);
        for (const auto& sb : S.blocks)
            if (sb.matrix_size != 1)
                throw UnsupportedFunctionalError("coefficient algebra is not basic");
        bool semis = jacobson_radical(*B).dim() == 0;
        if (semis) {
            build_semisimple_block(blk, blk.Wb, blk.phi_b, idems);
        } else {
            for (const auto& e : idems.elements)
                if (!blk.phi_b.eval(e).is_zero())
                    throw UnsupportedFunctionalError(
                        "non-semisimple summand with nonvanishing idempotent values");
            OmegaBasis om = build_omega_basis(B, blk.phi_b, idems);
            build_layered_block(blk, blk.Wb, om);
        }
        D.blocks.push_back(std::move(blk));
    }
    return D;
}

}  // namespace

InterlockedDecomposition check_interlocked(const RightModule& W, const OmegaBasis& om) {
    if (W.algebra != om.P && !(W.algebra->dim == om.P->dim && W.algebra->sc == om.P->sc))
        throw InputError("module and omega basis live over different algebras");
    return build_decomposition(W, om.phi, &om);
}

InterlockedDecomposition make_trace_decomposition(const RightModule& W, const SymmetricFunctional& phi) {
    return build_decomposition(W, phi, nullptr);
}

SymmetryReport verify_symmetry(const InterlockedDecomposition& D, int samples, uint64_t seed) {
    SymmetryReport rep;
    auto basis = module_endomorphisms(D.W);
    if (basis.empty()) return rep;
    uint64_t s = seed ? seed : 1;
    auto next = [&]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    };
    auto sample = [&]() {
        Mat E(D.W.dim, D.W.dim);
        for (const auto& b : basis) {
            long c = static_cast<long>(next() % 7) - 3;
            if (c != 0) E = E + scale(b, Scalar(c));
        }
        return E;
    };
    for (int i = 0; i < samples; ++i) {
        Mat a = sample(), b = sample();
        Scalar ab = D.pseudo_trace_unchecked(a * b);
        Scalar ba = D.pseudo_trace_unchecked(b * a);
        ++rep.tested;
        if (!(ab == ba)) ++rep.failed;
    }
    return rep;
}

Mat ModuleQuotient::induce(const Mat& endo) const {
    int q = quot.dim;
    Mat m(q, q);
    for (int j = 0; j < q; ++j) {
        Vec img = vec_mat(vec_mat(reps[j], endo), proj);
        for (int i = 0; i < q; ++i) m.at(j, i) = img[i];
    }
    return m;
}

ModuleQuotient module_quotient(const RightModule& W, const QuotientMap& algq, const Subspace& ideal) {
    ModuleQuotient out;
    // W * ideal
    std::vector<Vec> rows;
    for (const auto& nvec : ideal.basis) {
        Mat a = W.act(nvec);
        for (int r = 0; r < W.dim; ++r) rows.push_back(a.row(r));
    }
    Subspace U = span_of(rows, W.dim);
    int q = W.dim - U.dim();
    if (q == 0 || !algq.alg) {
        out.zero = true;
        return out;
    }
    std::vector<Vec> full = extend_basis(U.basis, W.dim);
    out.reps.assign(full.begin() + U.dim(), full.end());
    Mat B = Mat::from_rows(full, W.dim);
    auto Binv = inverse(B);
    if (!Binv) throw std::logic_error("module quotient basis failure");
    out.proj = Mat(W.dim, q);
    for (int i = 0; i < W.dim; ++i)
        for (int j = 0; j < q; ++j) out.proj.at(i, j) = Binv->at(i, U.dim() + j);
    std::vector<Mat> act;
    for (int t = 0; t < algq.alg->dim; ++t) {
        Mat amb = W.act(algq.reps[t]);
        Mat m(q, q);
        for (int j = 0; j < q; ++j) {
            Vec img = vec_mat(vec_mat(out.reps[j], amb), out.proj);
            for (int i = 0; i < q; ++i) m.at(j, i) = img[i];
        }
        act.push_back(std::move(m));
    }
    out.quot = RightModule::create(algq.alg, q, std::move(act));
    return out;
}

ShiftIdentity shift_identity(const InterlockedDecomposition& D, const Scalar& r, const Mat& g) {
    const Algebra& P = *D.W.algebra;
    if (!P.omega) throw InputError("omega absent");
    if (!is_endomorphism(D.W, g)) throw NotEndomorphismError("g is not a module endomorphism");
    ShiftIdentity out;
    Vec shifted_omega = vec_sub(*P.omega, vec_scale(P.unit, r));
    out.lhs = D.pseudo_trace_unchecked(g * D.W.act(shifted_omega));
    OmegaShift sh = omega_shift(D.phi, r);
    if (sh.zero) {
        out.quotient_zero = true;
        out.rhs = Scalar(0);
        return out;
    }
    ModuleQuotient mq = module_quotient(D.W, sh.quotient, sh.annihilator);
    if (mq.zero) {
        out.quotient_zero = true;
        out.rhs = Scalar(0);
        return out;
    }
    InterlockedDecomposition Dq = make_trace_decomposition(mq.quot, *sh.shifted);
    out.rhs = Dq.pseudo_trace(mq.induce(g));
    return out;
}

Scalar PseudoTraceTerm::eval(const Vec& a_source) const {
    if (module.dim == 0) return Scalar(0);
    Mat m(module.dim, module.dim);
    for (size_t i = 0; i < a_source.size(); ++i) {
        if (a_source[i].is_zero()) continue;
        m = m + scale(source_action[i], a_source[i]);
    }
    return dec.pseudo_trace_unchecked(m);
}

CanonicalModuleTerm canonical_module_term(const AlgebraPtr& A, const SymmetricFunctional& phi) {
    if (functional_radical(phi).dim() != 0) throw InputError("Rad(phi) != 0");
    CanonicalModuleTerm out;
    IdempotentSet idems = lift_idempotents(*A);
    auto reps = choose_class_representatives(*A, idems);
    IdempotentSet chosen;
    for (int rix : reps) chosen.elements.push_back(idems.elements[rix]);
    out.basic = basic_algebra(*A, chosen);
    const AlgebraPtr P = out.basic.basic.alg;
    Vec vals(P->dim);
    for (int t = 0; t < P->dim; ++t) vals[t] = phi.eval(out.basic.basic.basis[t]);
    out.phi_basic = SymmetricFunctional::create(P, vals);
    out.module = RightModule::create(P, static_cast<int>(out.basic.module_basis.size()),
                                     out.basic.module_action);
    out.dec = make_trace_decomposition(out.module, out.phi_basic);
    int md = out.module.dim;
    for (int t = 0; t < A->dim; ++t) {
        Mat L(md, md);
        for (int j = 0; j < md; ++j) {
            Vec img = A->mul(A->basis_vec(t), out.basic.module_basis[j]);
            auto c = coords_in(out.basic.module_basis, img);
            if (!c) throw std::logic_error("left action escapes Ae");
            for (int i = 0; i < md; ++i) L.at(j, i) = (*c)[i];
        }
        out.left_action.push_back(std::move(L));
    }
    return out;
}

Scalar CanonicalModuleTerm::trace_of_source(const Vec& a) const {
    Mat m(module.dim, module.dim);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) m = m + scale(left_action[i], a[i]);
    return dec.pseudo_trace_unchecked(m);
}

std::vector<PseudoTraceTerm> decompose_symmetric_function(const AlgebraPtr& A,
                                                          const SymmetricFunctional& phi) {
    std::vector<PseudoTraceTerm> terms;

    struct Item {
        AlgebraPtr B;
        std::vector<Vec> img;  // image of each original basis element in B
        SymmetricFunctional phi_b;
    };
    std::vector<Item> queue;
    {
        Item root{A, {}, phi};
        for (int t = 0; t < A->dim; ++t) root.img.push_back(A->basis_vec(t));
        queue.push_back(std::move(root));
    }

    int guard = 0;
    while (!queue.empty()) {
        if (++guard > 64 * A->dim) throw std::logic_error("decomposition did not terminate");
        Item it = std::move(queue.back());
        queue.pop_back();
        bool zero = true;
        for (const auto& v : it.phi_b.values)
            if (!v.is_zero()) { zero = false; break; }
        if (zero) continue;

        Subspace R = functional_radical(it.phi_b);
        if (R.dim() > 0) {
            QuotientMap q = quotient_by_ideal(*it.B, R);
            Item next{q.alg, {}, it.phi_b};
            for (const auto& v : it.img) next.img.push_back(q.project(v));
            Vec vals(q.alg->dim);
            for (int t = 0; t < q.alg->dim; ++t) vals[t] = it.phi_b.eval(q.reps[t]);
            next.phi_b = SymmetricFunctional::create(q.alg, std::move(vals));
            queue.push_back(std::move(next));
            continue;
        }

        auto split = indecomposable_blocks(*it.B);
        if (split.blocks.size() > 1) {
            for (size_t b = 0; b < split.blocks.size(); ++b) {
                const SubalgebraMap& sub = split.blocks[b];
                Item next{sub.alg, {}, it.phi_b};
                for (const auto& v : it.img)
                    next.img.push_back(sub.restrict(it.B->mul(split.central_idempotents[b], v)));
                Vec vals(sub.alg->dim);
                for (int t = 0; t < sub.alg->dim; ++t) vals[t] = it.phi_b.eval(sub.basis[t]);
                next.phi_b = SymmetricFunctional::create(sub.alg, std::move(vals));
                queue.push_back(std::move(next));
            }
            continue;
        }

        // indecomposable symmetric summand: peel the semisimple trace part
        IdempotentSet idems = lift_idempotents(*it.B);
        FunctionalSplit fs = split_semisimple_part(it.phi_b, idems);
        for (size_t b = 0; b < fs.structure.blocks.size(); ++b) {
            if (fs.block_weights[b].is_zero()) continue;
            const auto& blk = fs.structure.blocks[b];
            const Algebra& Bbar = *fs.structure.bar.alg;
            // simple module of block b: column space (Bbar z) ebar
            Vec ebar = fs.structure.bar.project(idems.elements[blk.members[0]]);
            std::vector<Vec> gens;
            for (int t = 0; t < Bbar.dim; ++t)
                gens.push_back(Bbar.mul(Bbar.mul(blk.central_idem, Bbar.basis_vec(t)), ebar));
            Subspace Mb = span_of(gens, Bbar.dim);
            PseudoTraceTerm term;
            term.ordinary = true;
            // coefficient algebra: the corner ebar Bbar ebar (one-dimensional)
            SubalgebraMap Pterm = corner(Bbar, ebar);
            if (Pterm.alg->dim != 1) throw std::logic_error("ordinary term corner is not one-dimensional");
            // functional with value = block weight on the idempotent itself
            Vec vals(1);
            vals[0] = fs.block_weights[b] / Pterm.alg->unit[0];
            term.phi_term = SymmetricFunctional::create(Pterm.alg, std::move(vals));
            std::vector<Mat> act;
            {
                Mat m(Mb.dim(), Mb.dim());
                for (int j = 0; j < Mb.dim(); ++j) {
                    Vec img = Bbar.mul(Mb.basis[j], Pterm.basis[0]);
                    auto c = coords_in(Mb.basis, img);
                    if (!c) throw std::logic_error("simple module not closed under the corner action");
                    for (int i = 0; i < Mb.dim(); ++i) m.at(j, i) = (*c)[i];
                }
                act.push_back(std::move(m));
            }
            term.module = RightModule::create(Pterm.alg, Mb.dim(), act);
            term.dec = make_trace_decomposition(term.module, term.phi_term);
            for (const auto& v : it.img) {
                Vec vbar = fs.structure.bar.project(v);
                Mat L(Mb.dim(), Mb.dim());
                for (int j = 0; j < Mb.dim(); ++j) {
                    Vec img = Bbar.mul(vbar, Mb.basis[j]);
                    auto c = coords_in(Mb.basis, img);
                    if (!c) throw std::logic_error("left action escapes the simple module");
                    for (int i = 0; i < Mb.dim(); ++i) L.at(j, i) = (*c)[i];
                }
                term.source_action.push_back(std::move(L));
            }
            terms.push_back(std::move(term));
        }

        bool phi0_zero = true;
        for (const auto& v : fs.phi0.values)
            if (!v.is_zero()) { phi0_zero = false; break; }
        if (phi0_zero) continue;

        if (functional_radical(fs.phi0).dim() > 0) {
            queue.push_back(Item{it.B, it.img, fs.phi0});
            continue;
        }

        // layered pseudo-trace term on the canonical module
        CanonicalModuleTerm cm = canonical_module_term(it.B, fs.phi0);
        PseudoTraceTerm term;
        term.phi_term = cm.phi_basic;
        term.module = cm.module;
        term.dec = cm.dec;
        for (const auto& v : it.img) {
            Mat L(cm.module.dim, cm.module.dim);
            for (size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) L = L + scale(cm.left_action[i], v[i]);
            term.source_action.push_back(std::move(L));
        }
        terms.push_back(term);

        // subtract and recurse; the remainder kills the socle, so the next
        // round strictly drops dimension
        Vec rem(it.B->dim);
        for (int t = 0; t < it.B->dim; ++t)
            rem[t] = fs.phi0.values[t] - cm.trace_of_source(it.B->basis_vec(t));
        bool rem_zero = true;
        for (const auto& v : rem)
            if (!v.is_zero()) { rem_zero = false; break; }
        if (!rem_zero) {
            auto phi_rem = SymmetricFunctional::create(it.B, rem);
            if (functional_radical(phi_rem).dim() == 0)
                throw std::logic_error("remainder functional is nondegenerate; no progress");
            queue.push_back(Item{it.B, it.img, phi_rem});
        }
    }

    // unconditional verification on every original basis element
    for (int t = 0; t < A->dim; ++t) {
        Scalar sum(0);
        for (const auto& term : terms) {
            Vec unit(A->dim, Scalar(0));
            unit[t] = Scalar(1);
            sum += term.eval(unit);
        }
        if (!(sum == phi.values[t]))
            throw std::logic_error("trace-term decomposition does not reproduce the functional");
    }
    return terms;
}

}  // namespace pst
