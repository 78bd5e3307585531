#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pst {

using Rat = mpq_class;

std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

// Rough size metric used for pivot selection: bits of numerator + denominator.
size_t rat_bitsize(const Rat& r);

std::optional<Rat> rat_sqrt(const Rat& r);

/// A simple extension field Q[t]/(m(t)) with m monic and irreducible over Q.
/// One extension may be declared per session; all non-rational scalars carry
/// a pointer to it. Degrees 2..4 are supported (irreducibility is checked
/// exactly in that range).
class NumberField {
public:
    explicit NumberField(std::vector<Rat> monic_minpoly);

    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
    const std::vector<Rat>& minpoly() const { return minpoly_; }

    // reduction_[k] = coefficients of t^(degree+k) reduced mod m, k = 0..degree-2
    const std::vector<std::vector<Rat>>& reduction_table() const { return reduction_; }

    std::string str() const;

private:
    std::vector<Rat> minpoly_;
    std::vector<std::vector<Rat>> reduction_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// An exact element of the base field: either a rational or an element of the
/// session number field, stored as a coefficient vector over Q.
class Scalar {
public:
    Scalar() : coeffs_(1, Rat(0)) {}
    Scalar(const Rat& r) : coeffs_(1, r) {}
    Scalar(long n) : coeffs_(1, Rat(n)) {}
    Scalar(int n) : coeffs_(1, Rat(n)) {}
    Scalar(FieldPtr field, std::vector<Rat> coeffs);

    static Scalar generator(const FieldPtr& field);

    bool is_rational() const { return field_ == nullptr; }
    bool is_zero() const;
    bool is_one() const;

    const Rat& rat() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const FieldPtr& field() const { return field_; }

    Scalar inverse() const;
    Scalar neg() const;

    std::string str() const;
    size_t bitsize() const;

    double to_double() const;  // rational scalars only

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

private:
    FieldPtr field_;            // null for plain rationals
    std::vector<Rat> coeffs_;   // length 1 (rational) or field degree

    void normalize();
    static void align(Scalar& a, Scalar& b);
};

Scalar operator-(const Scalar& a);

/// Parse "p/q" or "[c0, c1, ...]" (the latter only when a field is declared).
Scalar scalar_parse(const std::string& s, const FieldPtr& field);

}  // namespace pst
