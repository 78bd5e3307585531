#pragma once

#include "pst/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pst {

// Dense univariate polynomials over Q, lowest degree first.
// Used for minimal/characteristic polynomial bookkeeping and the small
// factoring engine behind idempotent splitting and omega spectra.
using QPoly = std::vector<Rat>;

int qp_deg(const QPoly& p);          // -1 for the zero polynomial
QPoly qp_trim(QPoly p);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const Rat& c);
QPoly qp_monic(const QPoly& a);
// division with remainder; b nonzero
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
QPoly qp_gcd(const QPoly& a, const QPoly& b);   // monic gcd
QPoly qp_derivative(const QPoly& a);
Rat qp_eval(const QPoly& a, const Rat& x);
std::string qp_str(const QPoly& a, const std::string& var = "x");
// s,t with s*a + t*b = gcd(a,b) (monic)
struct QPolyBezout { QPoly g, s, t; };
QPolyBezout qp_xgcd(const QPoly& a, const QPoly& b);

struct QFactor {
    QPoly poly;      // monic factor
    int mult = 1;
    bool irreducible = true;  // false: engine gave up (degree > 4, no rational root)
};

/// Factor a nonzero rational polynomial into monic factors.
/// Complete for degree <= 4 pieces; rational roots are extracted at any
/// degree. A residual piece the engine cannot certify is returned with
/// irreducible = false.
std::vector<QFactor> qp_factor(const QPoly& p);

/// Exact irreducibility test over Q; only valid for degree 1..4.
bool qp_irreducible(const QPoly& p);

/// All rational roots with multiplicities.
std::vector<std::pair<Rat, int>> qp_rational_roots(const QPoly& p);

// ---------------------------------------------------------------------------
// Polynomials over the (possibly extended) base field.

using SPoly = std::vector<Scalar>;

int sp_deg(const SPoly& p);
SPoly sp_trim(SPoly p);
SPoly sp_mul(const SPoly& a, const SPoly& b);
SPoly sp_sub(const SPoly& a, const SPoly& b);
SPoly sp_monic(const SPoly& a);
std::pair<SPoly, SPoly> sp_divmod(const SPoly& a, const SPoly& b);
SPoly sp_gcd(const SPoly& a, const SPoly& b);
SPoly sp_derivative(const SPoly& a);
Scalar sp_eval(const SPoly& a, const Scalar& x);
std::string sp_str(const SPoly& a, const std::string& var = "x");

/// Square root of a scalar inside the base field, when one exists there.
/// Rational scalars use exact integer square roots; quadratic extensions use
/// the closed form. Higher-degree extensions only recognize rational squares.
std::optional<Scalar> scalar_sqrt(const Scalar& c);
std::optional<Scalar> scalar_sqrt(const Scalar& c, const FieldPtr& field);

/// Extract every root of p lying in the base field, with multiplicities;
/// `remainder` is the monic cofactor with no roots in the field.
/// Rational roots are found at any degree; quadratic cofactors are resolved
/// with scalar_sqrt.
struct FieldRoots {
    std::vector<std::pair<Scalar, int>> roots;
    SPoly remainder;
};
FieldRoots sp_field_roots(const SPoly& p, const FieldPtr& field);

}  // namespace pst
