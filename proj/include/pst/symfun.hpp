#pragma once

#include "pst/algebra.hpp"

namespace pst {

/// A linear map phi: A -> F with phi(ab) = phi(ba), given by its values on
/// the basis. Symmetry is checked at construction.
struct SymmetricFunctional {
    AlgebraPtr algebra;
    Vec values;

    Scalar eval(const Vec& a) const { return dot(values, a); }
    Scalar eval_basis(int i) const { return values[i]; }

    static SymmetricFunctional create(AlgebraPtr A, Vec values);
};

/// Rad(phi) = {a : phi(x a y) = 0 for all x, y}; a two-sided ideal.
Subspace functional_radical(const SymmetricFunctional& phi);

/// G_{ij} = phi(b_i b_j); nondegenerate iff Rad(phi) = 0.
Mat gram_matrix(const SymmetricFunctional& phi);

/// phi = pi + phi0 with pi the unique symmetric functional factoring through
/// A/J(A) that agrees with phi on the idempotents (a weighted sum of simple
/// block traces), and phi0 vanishing on every idempotent.
struct FunctionalSplit {
    SemisimpleStructure structure;
    std::vector<Scalar> block_weights;  // pi = sum_b weight_b * tr_b
    SymmetricFunctional pi;
    SymmetricFunctional phi0;
};
FunctionalSplit split_semisimple_part(const SymmetricFunctional& phi, const IdempotentSet& idems);

// ---------------------------------------------------------------------------

/// One element rho^{ij}_s of the dual-layer basis: it lives in e_i P e_j;
/// s runs 0..d_ii+1 on diagonal blocks (0 is e_i, d_ii+1 is f_i) and
/// 1..d_ij off the diagonal.
struct OmegaElement {
    int i, j, s;
    Vec vec;
};

/// The structured basis of a basic symmetric indecomposable algebra with
/// vanishing idempotent values: a Peirce-compatible basis with an exact dual
/// pairing <rho, rho*> = 1 (all other pairings zero) and the product rule
/// rho * rho* = f_i. Duality pairs rho^{ij}_s with rho^{ji}_{d_ij + 1 - s}.
struct OmegaBasis {
    AlgebraPtr P;
    SymmetricFunctional phi;
    IdempotentSet idems;
    std::vector<Vec> socle_duals;             // f_i
    std::vector<std::vector<int>> d;          // layer bounds d[i][j]
    std::vector<OmegaElement> elements;
    std::vector<int> dual_index;              // position of rho* for each element
    std::vector<int> e_index, f_index;        // positions of e_i and f_i
    Mat pairing;                              // phi(rho_u rho_v)

    int size() const { return static_cast<int>(elements.size()); }
    int find(int i, int j, int s) const;
};

/// Constructs the basis and verifies every defining condition exhaustively.
/// Preconditions (all checked): P basic, indecomposable, Rad(phi) = 0,
/// phi(e_i) = 0. Throws ObstructionError when an exact normalization would
/// need a square root missing from the base field.
OmegaBasis build_omega_basis(const AlgebraPtr& P, const SymmetricFunctional& phi,
                             const IdempotentSet& idems);

/// span(Omega - {f_1..f_k}) = (sum_i F e_i)^perp; also re-checks that
/// products rho*mu with mu != rho* land inside it.
Subspace idempotent_perp(const OmegaBasis& om);

/// Quotient data for the shifted functional a -> phi((omega - r) a) on
/// P / {a : (omega - r) a = 0}.
struct OmegaShift {
    bool zero = false;               // annihilator was everything
    Subspace annihilator;
    QuotientMap quotient;
    std::optional<SymmetricFunctional> shifted;
};
OmegaShift omega_shift(const SymmetricFunctional& phi, const Scalar& r);

}  // namespace pst
