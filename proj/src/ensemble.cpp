#include "wradius/ensemble.hpp"

#include <cmath>
#include <numbers>

#include "wradius/eig.hpp"

namespace wradius {

const char* ensemble_name(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::gaussian:
            return "gaussian";
        case EnsembleKind::nilpotent:
            return "nilpotent";
        case EnsembleKind::normal:
            return "normal";
        case EnsembleKind::positive:
            return "positive";
        case EnsembleKind::shift:
            return "shift";
    }
    return "";
}

std::optional<EnsembleKind> parse_ensemble(const std::string& name) {
    for (EnsembleKind kind : {EnsembleKind::gaussian, EnsembleKind::nilpotent,
                              EnsembleKind::normal, EnsembleKind::positive, EnsembleKind::shift}) {
        if (name == ensemble_name(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

double MatrixSampler::uniform01() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double MatrixSampler::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on open-interval uniforms; +1 in the mantissa keeps u1 > 0.
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
}

Complex MatrixSampler::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) * std::sqrt(0.5);
}

std::vector<Complex> MatrixSampler::unit_vector(std::size_t dim) {
    std::vector<Complex> v(dim);
    double norm2 = 0.0;
    while (norm2 == 0.0) {
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = complex_gaussian();
            norm2 += std::norm(v[i]);
        }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& x : v) {
        x *= inv;
    }
    return v;
}

namespace {

// Unitary factor of a square matrix by modified Gram-Schmidt, two passes.
ComplexMatrix mgs_unitary(const ComplexMatrix& g) {
    const std::size_t n = g.rows();
    ComplexMatrix u = g;
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex coeff(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) {
                    coeff += std::conj(u(i, k)) * u(i, j);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    u(i, j) -= coeff * u(i, k);
                }
            }
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            norm2 += std::norm(u(i, j));
        }
        const double norm = std::sqrt(norm2);
        // A gaussian draw is almost surely full rank; fall back to a basis
        // column if a degenerate column ever appears.
        if (norm < 1e-12) {
            for (std::size_t i = 0; i < n; ++i) {
                u(i, j) = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            }
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            u(i, j) /= norm;
        }
    }
    return u;
}

}  // namespace

ComplexMatrix MatrixSampler::dense(EnsembleKind kind, std::size_t dim) {
    switch (kind) {
        case EnsembleKind::gaussian: {
            ComplexMatrix m(dim, dim);
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    m(i, j) = complex_gaussian();
                }
            }
            return m;
        }
        case EnsembleKind::nilpotent: {
            ComplexMatrix m(dim, dim);
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = i + 1; j < dim; ++j) {
                    m(i, j) = complex_gaussian();
                }
            }
            return m;
        }
        case EnsembleKind::normal: {
            ComplexMatrix diag(dim, dim);
            for (std::size_t i = 0; i < dim; ++i) {
                diag(i, i) = complex_gaussian();
            }
            const ComplexMatrix u = mgs_unitary(dense(EnsembleKind::gaussian, dim));
            return matmul(u, matmul(diag, adjoint(u)));
        }
        case EnsembleKind::positive: {
            const ComplexMatrix g = dense(EnsembleKind::gaussian, dim);
            return matmul(adjoint(g), g);
        }
        case EnsembleKind::shift: {
            ComplexMatrix m(dim, dim);
            for (std::size_t i = 0; i + 1 < dim; ++i) {
                m(i, i + 1) = std::abs(gaussian());
            }
            return m;
        }
    }
    throw DomainError("unknown ensemble kind");
}

BlockOperatorMatrix MatrixSampler::block_matrix(EnsembleKind kind, std::size_t n, std::size_t d) {
    BlockOperatorMatrix b(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b.block(i, j) = dense(kind, d);
        }
    }
    return b;
}

std::vector<BlockOperatorMatrix> make_ensemble(const EnsembleSpec& spec) {
    MatrixSampler sampler(spec.seed);
    std::vector<BlockOperatorMatrix> out;
    out.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        out.push_back(sampler.block_matrix(spec.ensemble, spec.n, spec.d));
    }
    return out;
}

}  // namespace wradius
