#pragma once

#include "cqg/linalg.hpp"
#include "cqg/scalar.hpp"

namespace cqg {

using ScalarMatrix = Matrix<Scalar>;

/// The coloured 4x4 R-matrix.  Colour arguments are affine exponent forms,
/// so both symbolic colours and rational values are accepted.
///
///   diag( q^{1-(l-m)}, q^{l+m}, q^{-(l+m)}, q^{1+(l-m)} ),  entry (3,2) = q - q^{-1}
ScalarMatrix build_r(const Exponent& first, const Exponent& second);

/// Braid form P * R(first, second).
ScalarMatrix build_braid(const Exponent& first, const Exponent& second);

enum class Sign { plus, minus };

/// R+ = c+ * R21 (computed as P R P),  R- = c- * R12^{-1}.
ScalarMatrix build_r_pm(Sign sign, const Exponent& first, const Exponent& second);

/// Residual of R12 R13 R23 - R23 R13 R12 with the three-colour pattern
///   R12(l,m), R13(l,n), R23(m,n).  Identically zero when the coloured
/// Yang-Baxter equation holds.
ScalarMatrix check_cqybe(const Exponent& l, const Exponent& m, const Exponent& n);

/// Residual of the braided variant
///   Rh23(l,m) Rh12(l,n) Rh23(m,n) - Rh12(m,n) Rh23(l,n) Rh12(l,m).
ScalarMatrix check_braided_ybe(const Exponent& l, const Exponent& m, const Exponent& n);

}  // namespace cqg
