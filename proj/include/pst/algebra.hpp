#pragma once

#include "pst/errors.hpp"
#include "pst/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pst {

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A finite-dimensional associative unital algebra over the base field,
/// presented by structure constants b_i * b_j = sum_k c[i][j][k] b_k.
/// Construction checks associativity, the unit law, and (when present)
/// centrality of the distinguished element omega.
struct Algebra {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Scalar> sc;  // dense, index (i*dim + j)*dim + k
    Vec unit;
    std::optional<Vec> omega;
    FieldPtr field;  // session extension, may be null

    const Scalar& c(int i, int j, int k) const { return sc[(static_cast<size_t>(i) * dim + j) * dim + k]; }
    Scalar& c_mut(int i, int j, int k) { return sc[(static_cast<size_t>(i) * dim + j) * dim + k]; }

    Vec basis_vec(int i) const;
    Vec mul(const Vec& a, const Vec& b) const;
    /// matrix of w -> w*a on row vectors; an algebra homomorphism
    Mat right_mul(const Vec& a) const;
    /// matrix of w -> a*w on row vectors; an anti-homomorphism
    Mat left_mul(const Vec& a) const;

    Vec pow(const Vec& a, int k) const;

    /// `validate` runs the full axiom check; internal constructions (quotients,
    /// corners) pass false since their tables are associative by construction.
    static AlgebraPtr create(int dim, std::vector<std::string> labels, std::vector<Scalar> sc,
                             Vec unit, std::optional<Vec> omega, FieldPtr field,
                             bool validate = true);
};

/// Minimal polynomial of an element under the regular representation.
SPoly element_min_poly(const Algebra& A, const Vec& a);

// -- structure ---------------------------------------------------------------

/// J(A) by the characteristic-zero trace-form criterion:
/// {x : tr(L_{x b}) = 0 for every basis b}.
Subspace jacobson_radical(const Algebra& A);

/// Left socle {a : J(A) a = 0}. With `check_right` the right socle is
/// computed as well and a mismatch raises (symmetric algebras must agree).
Subspace socle(const Algebra& A, bool check_right = false);

Subspace center_subspace(const Algebra& A);

/// Powers J^k as subspaces; loewy_length = least n with J^n = 0.
std::vector<Subspace> radical_powers(const Algebra& A);
int loewy_length(const Algebra& A);

// -- derived algebras ---------------------------------------------------------

struct QuotientMap {
    AlgebraPtr alg;          // may be null when the ideal is everything
    Mat proj;                // dim x qdim, image coords = w * proj
    std::vector<Vec> reps;   // qdim representative vectors in the parent
    Vec project(const Vec& v) const { return vec_mat(v, proj); }
    Vec lift(const Vec& v) const;
};

/// Quotient by a two-sided ideal (not checked to be an ideal).
QuotientMap quotient_by_ideal(const Algebra& A, const Subspace& ideal);

struct SubalgebraMap {
    AlgebraPtr alg;
    std::vector<Vec> basis;  // vectors in the parent algebra
    Vec embed(const Vec& v) const;          // sub coords -> parent vector
    Vec restrict(const Vec& v) const;       // parent vector (must lie in span) -> sub coords
};

/// Unital subalgebra spanned by `span_vectors` (closure is checked), with the
/// given unit element.
SubalgebraMap subalgebra(const Algebra& A, const std::vector<Vec>& span_vectors, const Vec& unit);

/// Peirce corner eAe with unit e.
SubalgebraMap corner(const Algebra& A, const Vec& e);

// -- idempotents --------------------------------------------------------------

struct IdempotentSet {
    std::vector<Vec> elements;
    int size() const { return static_cast<int>(elements.size()); }
};

/// Orthogonality, idempotency, (optionally) completeness and primitivity.
void validate_idempotent_set(const Algebra& A, const IdempotentSet& e, bool check_primitive,
                             bool check_complete = true);

bool is_primitive_idempotent(const Algebra& A, const Vec& e);

/// A complete set of mutually orthogonal primitive idempotents summing to 1,
/// obtained by lifting idempotents of A/J(A) with the cubic Newton step
/// e <- 3e^2 - 2e^3. Throws NonSplitError when A/J(A) has a simple summand
/// that is not a matrix algebra over the base field.
IdempotentSet lift_idempotents(const Algebra& A);

// -- block / simple-summand data ----------------------------------------------

struct SimpleBlockInfo {
    Vec central_idem;          // in A/J(A) coordinates
    std::vector<int> members;  // indices into the complete idempotent set
    int matrix_size = 0;       // n with block isomorphic to M_n(base field)
};

struct SemisimpleStructure {
    QuotientMap bar;  // A -> A/J(A)
    std::vector<SimpleBlockInfo> blocks;
};

/// Simple summands of A/J(A), the block membership of a complete idempotent
/// set, and the matrix size of each split summand.
SemisimpleStructure semisimple_structure(const Algebra& A, const IdempotentSet& idems);

/// Trace of the image of `a` on the simple module of block `b`.
Scalar simple_block_trace(const Algebra& A, const SemisimpleStructure& S, int b, const Vec& a);

struct BlockDecomposition {
    std::vector<SubalgebraMap> blocks;
    std::vector<Vec> central_idempotents;
};

/// Decomposition into indecomposable two-sided-ideal summands via the
/// primitive idempotents of the center.
BlockDecomposition indecomposable_blocks(const Algebra& A);

// -- omega -------------------------------------------------------------------

struct OmegaEigen {
    Scalar value;
    int multiplicity;  // least m with (omega - r)^m killing the block
};

/// Eigenvalues of the central element with the exponents of its minimal
/// polynomial; NonSplitError(Omega) if a factor stays nonlinear over the field.
std::vector<OmegaEigen> omega_spectrum(const Algebra& A);

// -- basic algebra -------------------------------------------------------------

struct BasicAlgebraResult {
    SubalgebraMap basic;               // eAe with embedding into A
    IdempotentSet chosen;              // the summed idempotents, in A coords
    Vec e;                             // their sum
    std::vector<Vec> module_basis;     // basis of Ae inside A
    std::vector<Mat> module_action;    // right action of each eAe basis element on Ae
};

/// eAe for e the sum of one primitive idempotent per isomorphism class of
/// simple summand, together with the right eAe-module Ae.
BasicAlgebraResult basic_algebra(const Algebra& A, const IdempotentSet& idems);

/// Indices into `idems` choosing one representative per isomorphism class
/// (first member of each simple block, in input order).
std::vector<int> choose_class_representatives(const Algebra& A, const IdempotentSet& idems);

}  // namespace pst
