#pragma once

#include "pst/symfun.hpp"

#include <array>

namespace pst {

/// A finite-dimensional right module over an algebra, acting on row vectors:
/// w.a = w * action(a). The action map is a homomorphism (checked).
struct RightModule {
    AlgebraPtr algebra;
    int dim = 0;
    std::vector<Mat> action;  // one matrix per algebra basis element

    Mat act(const Vec& a) const;

    static RightModule create(AlgebraPtr A, int dim, std::vector<Mat> action);
};

RightModule regular_module(const AlgebraPtr& A);

/// Canonical basis of End_P(W) = commutant of the action, as matrices.
std::vector<Mat> module_endomorphisms(const RightModule& W);
bool is_endomorphism(const RightModule& W, const Mat& alpha);

/// The certified decomposition of a module interlocked with phi, with the
/// data needed to read off pseudo-traces. Blocks of a decomposable
/// coefficient algebra are handled summand by summand; each indecomposable
/// summand is either semisimple (weighted ordinary traces) or carries a
/// layered dual basis.
struct InterlockedDecomposition {
    RightModule W;
    SymmetricFunctional phi;

    struct Block {
        std::vector<Vec> wbasis;        // basis of W z_b, ambient coordinates
        RightModule Wb;                 // restriction, block coordinates
        SubalgebraMap onto;             // P -> block algebra
        SymmetricFunctional phi_b;
        bool semisimple = false;

        // semisimple data: weight and basis of (W z_b) e_i per idempotent
        std::vector<Scalar> weights;
        std::vector<std::vector<Vec>> unit_bases;

        // layered data
        std::optional<OmegaBasis> om;
        std::vector<std::vector<Vec>> t_reps;      // per class, block coordinates
        std::vector<std::array<int, 3>> comps;     // (class p, rep index, omega element)
        Mat comp_mat;                              // rows = component vectors
        Mat comp_inv;
        std::vector<std::vector<int>> fpos;        // comps index of (s, i, f_s)
    };
    std::vector<Block> blocks;

    int t_dim(int block, int cls) const { return static_cast<int>(blocks[block].t_reps[cls].size()); }

    /// Def-style pseudo-trace of an endomorphism (commutation is checked).
    Scalar pseudo_trace(const Mat& alpha) const;
    Scalar pseudo_trace_unchecked(const Mat& alpha) const;
};

/// Verifies the kernel criterion Ker(f_i) = sum_{rho != e_i} W rho for every
/// class and produces the component decomposition. NotInterlockedError carries
/// the failing class and a witness vector.
InterlockedDecomposition check_interlocked(const RightModule& W, const OmegaBasis& om);

/// General entry point: classifies (P, phi) blockwise (semisimple weights /
/// layered basis), requiring P basic and Rad(phi) = 0. Throws
/// UnsupportedFunctionalError for a non-semisimple summand whose functional
/// does not vanish on idempotents.
InterlockedDecomposition make_trace_decomposition(const RightModule& W, const SymmetricFunctional& phi);

/// tr(alpha beta) = tr(beta alpha) over deterministically sampled pairs from
/// End_P(W); returns the number of pairs tested and failed.
struct SymmetryReport {
    int tested = 0;
    int failed = 0;
};
SymmetryReport verify_symmetry(const InterlockedDecomposition& D, int samples, uint64_t seed = 1);

/// Both sides of tr^phi_W(g (omega - r)) = tr^{(omega-r)phi}_{W/WN}(g).
struct ShiftIdentity {
    Scalar lhs;
    Scalar rhs;
    bool quotient_zero = false;
};
ShiftIdentity shift_identity(const InterlockedDecomposition& D, const Scalar& r, const Mat& g);

/// Module quotient W / W*ideal over the quotient algebra.
struct ModuleQuotient {
    bool zero = false;
    RightModule quot;
    std::vector<Vec> reps;  // ambient representatives of the quotient basis
    Mat proj;               // ambient -> quotient coordinates
    Mat induce(const Mat& endo) const;  // push an endomorphism down
};
ModuleQuotient module_quotient(const RightModule& W, const QuotientMap& algq, const Subspace& ideal);

/// One summand of a symmetric function decomposed into trace terms: a
/// functional on a basic coefficient algebra, a module interlocked with it,
/// and the action of the original algebra on that module.
struct PseudoTraceTerm {
    SymmetricFunctional phi_term;       // on the term's coefficient algebra
    RightModule module;
    InterlockedDecomposition dec;
    std::vector<Mat> source_action;     // left action of each original basis element
    bool ordinary = false;              // weighted ordinary trace term

    Scalar eval(const Vec& a_source) const;
};

/// Writes phi as a sum of pseudo-trace terms (ordinary trace summands plus
/// layered summands), verifying the sum against phi on every basis element
/// before returning.
std::vector<PseudoTraceTerm> decompose_symmetric_function(const AlgebraPtr& A,
                                                          const SymmetricFunctional& phi);

/// The canonical interlocked module Ae over eAe for a symmetric pair (A, phi)
/// with Rad(phi) = 0, together with the left A-action. The pseudo-trace of
/// the left action of a socle element equals phi on it.
struct CanonicalModuleTerm {
    BasicAlgebraResult basic;
    SymmetricFunctional phi_basic;
    RightModule module;
    InterlockedDecomposition dec;
    std::vector<Mat> left_action;  // per A basis element
    Scalar trace_of_source(const Vec& a) const;
};
CanonicalModuleTerm canonical_module_term(const AlgebraPtr& A, const SymmetricFunctional& phi);

}  // namespace pst
