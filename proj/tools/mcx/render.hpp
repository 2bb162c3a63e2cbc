#pragma once

// Human-readable output (6 significant digits). Both forms re-parse as
// expressions: "1 - 2·i1 + 0.5·i1i2" and "3·ε1 + (1 - 2·i1)·ε2".

#include <string>

#include "mcx/idempotent.hpp"

namespace mcx::cli {

/// Coefficients with |x| <= tol * max(1, max|x|) are omitted.
std::string render_standard(const Multicomplex& value, double tol = kDefaultTol);
std::string render_idempotent(const IdempotentRep& value, double tol = kDefaultTol);

/// %.6g
std::string format_short(double x);
/// "i1i3" for the unit set {1, 3}; empty for the real unit.
std::string unit_name(UnitSet a);

}  // namespace mcx::cli
