#include "wradius/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace wradius {

namespace {

// Symmetrize the product V D V* after reconstruction; the rounding skew is
// harmless but downstream Hermitian checks should see an exact fixed point.
ComplexMatrix reconstruct(const ComplexMatrix& v, const std::vector<double>& d) {
    const std::size_t n = v.rows();
    ComplexMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scaled(i, j) = v(i, j) * d[j];
        }
    }
    ComplexMatrix m = matmul(scaled, adjoint(v));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    return m;
}

void validate_pair(const FunctionPair& pair, const std::vector<double>& samples) {
    if (!pair.f || !pair.g) {
        throw DomainError("function pair is incomplete");
    }
    for (double x : samples) {
        const double fx = pair.f(x);
        const double gx = pair.g(x);
        if (!(fx >= 0.0) || !(gx >= 0.0)) {
            throw DomainError("function pair must be nonnegative on [0, inf)");
        }
        if (std::abs(fx * gx - x) > 1e-10 * (1.0 + x)) {
            throw DomainError("function pair does not satisfy f(x) g(x) = x");
        }
    }
}

}  // namespace

FunctionPair FunctionPair::power(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("power pair exponent must lie in [0, 1]");
    }
    FunctionPair p;
    p.f = [t](double x) { return t == 0.0 ? 1.0 : std::pow(x, t); };
    p.g = [t](double x) { return t == 1.0 ? 1.0 : std::pow(x, 1.0 - t); };
    p.label = "power(t=" + std::to_string(t) + ")";
    return p;
}

PsdEig::PsdEig(const ComplexMatrix& p) {
    HermitianEig eig = hermitian_eig(p);
    lam_ = std::move(eig.eigenvalues);
    v_ = std::move(eig.eigenvectors);
    const double lam_max = std::max(lam_.back(), 0.0);
    const double window = 1e-10 * lam_max;
    for (double& l : lam_) {
        if (l < -window) {
            throw NotPsdError("matrix has a negative eigenvalue beyond the clamp window");
        }
        l = std::max(l, 0.0);
    }
}

ComplexMatrix PsdEig::apply(const std::function<double(double)>& fn) const {
    std::vector<double> d(lam_.size());
    std::transform(lam_.begin(), lam_.end(), d.begin(), fn);
    return reconstruct(v_, d);
}

ComplexMatrix PsdEig::pow(double s) const {
    if (s == 0.0) {
        return ComplexMatrix::identity(lam_.size());
    }
    return apply([s](double x) { return std::pow(x, s); });
}

ComplexMatrix psd_power(const ComplexMatrix& p, double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw DomainError("psd_power exponent must lie in [0, 1]");
    }
    return PsdEig(p).pow(s);
}

AbsFactors abs_factors(const ComplexMatrix& a) {
    require_square(a, "abs_factors");
    AbsFactors out;
    out.abs_a = PsdEig(matmul(adjoint(a), a)).pow(0.5);
    out.abs_a_star = PsdEig(matmul(a, adjoint(a))).pow(0.5);
    return out;
}

ComplexMatrix polar_isometry(const ComplexMatrix& a) {
    require_square(a, "polar_isometry");
    const SvdFactors f = svd(a);
    const double cutoff = 1e-12 * (f.singular_values.empty() ? 0.0 : f.singular_values[0]);
    const std::size_t n = a.rows();
    ComplexMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (f.singular_values[j] <= cutoff) {
            continue;
        }
        // Rank-one update U += u_j v_j*.
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                u(r, c) += f.U(r, j) * std::conj(f.V(c, j));
            }
        }
    }
    return u;
}

ContractionFactorization contraction_factorization(const ComplexMatrix& a,
                                                   const FunctionPair& pair) {
    require_square(a, "contraction_factorization");
    ContractionFactorization out;
    out.pair = pair;
    out.k = polar_isometry(a);
    const AbsFactors abs = abs_factors(a);
    out.abs_a = abs.abs_a;
    out.abs_a_star = abs.abs_a_star;

    // Sample the product identity at the spectrum of |A| plus a spread of
    // generic points, so a bad pair is rejected before it can leak into a bound.
    std::vector<double> samples = PsdEig(matmul(adjoint(a), a)).eigenvalues();
    for (double& s : samples) {
        s = std::sqrt(s);
    }
    const double top = samples.empty() ? 1.0 : std::max(samples.back(), 1.0);
    for (int i = 0; i <= 8; ++i) {
        samples.push_back(top * static_cast<double>(i) / 8.0);
    }
    validate_pair(pair, samples);
    return out;
}

bool lemma_inequality_check(const ComplexMatrix& a, const FunctionPair& pair,
                            const std::vector<Complex>& x, const std::vector<Complex>& y) {
    const ContractionFactorization fac = contraction_factorization(a, pair);

    const ComplexMatrix f_abs = PsdEig(fac.abs_a).apply(pair.f);
    const ComplexMatrix g_abs_star = PsdEig(fac.abs_a_star).apply(pair.g);
    const ComplexMatrix abs_k = PsdEig(matmul(adjoint(fac.k), fac.k)).pow(0.5);
    const ComplexMatrix abs_k_star = PsdEig(matmul(fac.k, adjoint(fac.k))).pow(0.5);

    const ComplexMatrix lhs_x = matmul(f_abs, matmul(abs_k, f_abs));
    const ComplexMatrix lhs_y = matmul(g_abs_star, matmul(abs_k_star, g_abs_star));

    const double form_x = inner_product(apply(lhs_x, x), x).real();
    const double form_y = inner_product(apply(lhs_y, y), y).real();
    const double pairing = std::norm(inner_product(apply(a, x), y));

    return pairing <= form_x * form_y + 1e-10;
}

}  // namespace wradius
