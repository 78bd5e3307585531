#pragma once

#include "pst/linalg.hpp"
#include "pst/poly.hpp"

#include <stdexcept>
#include <string>

namespace pst {

/// Base for structured failures that callers are expected to handle.
struct PstError : std::runtime_error {
    explicit PstError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data violates a schema or a declared invariant.
struct InputError : PstError {
    explicit InputError(const std::string& what) : PstError(what) {}
};

/// A semisimple quotient (or omega spectrum, or block-center field) does not
/// split over the base field; `witness` is a polynomial whose root field
/// would be needed.
struct NonSplitError : PstError {
    enum class Kind { SemisimpleQuotient, Omega, CenterField };
    Kind kind;
    SPoly witness;
    NonSplitError(Kind k, SPoly w, const std::string& context);
};

/// A right module failed the interlocked-kernel criterion for idempotent i.
struct NotInterlockedError : PstError {
    int idem_index;
    Vec witness;
    NotInterlockedError(int i, Vec w);
};

/// The supplied matrix does not commute with the module action.
struct NotEndomorphismError : PstError {
    explicit NotEndomorphismError(const std::string& what) : PstError(what) {}
};

/// Adding q-tau series whose leading exponents differ by a non-integer.
struct IncompatibleExponentsError : PstError {
    explicit IncompatibleExponentsError(const std::string& what) : PstError(what) {}
};

/// A functional/algebra pair outside the supported trace constructions
/// (non-semisimple part with nonvanishing values on idempotents).
struct UnsupportedFunctionalError : PstError {
    explicit UnsupportedFunctionalError(const std::string& what) : PstError(what) {}
};

/// The dual-basis construction needs a scalar (a square root) that does not
/// exist in the base field.
struct ObstructionError : PstError {
    explicit ObstructionError(const std::string& what) : PstError(what) {}
};

}  // namespace pst
