#pragma once

#include "wradius/enclosure.hpp"
#include "wradius/matrix.hpp"

namespace wradius {

/// Certified enclosure of the numerical radius
///   w(A) = max over theta of lambda_max((e^{i theta} A + e^{-i theta} A*) / 2).
/// The angle sweep starts from a uniform grid, polishes the best cell by
/// golden section (lower bound only), and subdivides intervals until the
/// certified upper bound is within tol of the best evaluation. Certificates
/// combine the global Lipschitz constant ||A|| with the envelope-of-cosines
/// chord bound; the golden-section values are never trusted for the hi side.
Enclosure numerical_radius(const ComplexMatrix& a, double tol);

/// Same with the default tolerance 1e-8 * (1 + ||A||).
Enclosure numerical_radius(const ComplexMatrix& a);

/// Fast path for entrywise nonnegative real matrices:
///   w(A) = lambda_max(A + A^T) / 2.
/// Throws DomainError on a negative or non-real entry.
Enclosure w_nonneg(const ComplexMatrix& a);

/// True iff the fast-path and sweep enclosures overlap. Diagnostic for the
/// two independent evaluation routes; requires a nonnegative real matrix.
bool crosscheck(const ComplexMatrix& a);

}  // namespace wradius
