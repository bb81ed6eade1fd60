#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wradius/eig.hpp"
#include "wradius/matrix.hpp"

namespace wradius {

/// Nonnegative continuous pair (f, g) with f(x) g(x) = x on [0, inf).
/// The product identity is validated by sampling where a factorization is
/// built, so a broken pair fails loudly instead of producing a wrong bound.
struct FunctionPair {
    std::function<double(double)> f;
    std::function<double(double)> g;
    std::string label;

    /// The power pair f(x) = x^t, g(x) = x^(1-t) with t in [0, 1] and the
    /// convention x^0 = 1 (so f or g is constant one at the ends).
    static FunctionPair power(double t);
};

/// Eigendecomposition of a PSD matrix with the functional calculus on top.
/// Eigenvalues in the window [-1e-10 * lambda_max, 0) are clamped to zero;
/// anything lower throws NotPsdError.
class PsdEig {
public:
    explicit PsdEig(const ComplexMatrix& p);

    const std::vector<double>& eigenvalues() const noexcept { return lam_; }

    /// V diag(fn(lambda_i)) V*.
    ComplexMatrix apply(const std::function<double(double)>& fn) const;

    /// Power with the x^0 = 1 convention; pow(0) is the exact identity.
    ComplexMatrix pow(double s) const;

private:
    std::vector<double> lam_;
    ComplexMatrix v_;
};

/// P^s for PSD P and s in [0, 1]; psd_power(P, 0) is the exact identity.
ComplexMatrix psd_power(const ComplexMatrix& p, double s);

/// |A| = (A*A)^(1/2) and |A*| = (AA*)^(1/2).
struct AbsFactors {
    ComplexMatrix abs_a;
    ComplexMatrix abs_a_star;
};
AbsFactors abs_factors(const ComplexMatrix& a);

/// Polar partial isometry U with A = U |A|; singular directions with
/// sigma <= 1e-12 * sigma_max are dropped, so U vanishes on the kernel.
ComplexMatrix polar_isometry(const ComplexMatrix& a);

/// A = g(|A*|) K f(|A|) with a contraction K. The same polar isometry
/// works for every admissible pair: g(|A*|) U = U g(|A|) on the support.
struct ContractionFactorization {
    ComplexMatrix k;
    ComplexMatrix abs_a;
    ComplexMatrix abs_a_star;
    FunctionPair pair;
};
ContractionFactorization contraction_factorization(const ComplexMatrix& a,
                                                   const FunctionPair& pair);

/// Test-harness check of the factorization inequality
///   |<A x, y>|^2 <= <f(|A|) |K| f(|A|) x, x> * <g(|A*|) |K*| g(|A*|) y, y>
/// for unit vectors x, y, with additive slack 1e-10. Not used by any bound.
bool lemma_inequality_check(const ComplexMatrix& a, const FunctionPair& pair,
                            const std::vector<Complex>& x, const std::vector<Complex>& y);

}  // namespace wradius
